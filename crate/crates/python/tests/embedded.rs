use gcm::gcm as gcm_module;
use pyo3::prelude::*;

fn run(code: &std::ffi::CStr) -> PyResult<()> {
    pyo3::append_to_inittab!(gcm_module);
    Python::initialize();
    Python::attach(|py| py.run(code, None, None))
}

#[test]
fn bindings_round_trip_through_the_interpreter() {
    run(c"
import gcm, json
k = gcm.SimplicialComplex(4, [[1, 2], [1, 4], [2, 3], [2, 4], [3, 4]])
assert k.is_matroid()
r = k.deform()
assert r.method == 'matroid' and r.all_passed()
assert r.ideal.generators == [[2, 2, 0, 2], [1, 0, 1, 0], [0, 2, 2, 2]]
assert r.ideal.cm_test() == (True, 1, 1)
assert json.loads(r.to_json())['checks']['is_deformation']
m = gcm.MonomialIdeal(3, [[1, 1, 0], [1, 0, 1]])
assert not m.is_generic()
try:
    m.irreducible_decomposition()
    raise AssertionError('expected an error')
except gcm.GcmError as e:
    assert e.args[0] == 'NotGeneric'
assert sorted(m.irreducible_decomposition(oracle=True)) == [[0, 1, 1], [1, 0, 0]]
")
    .unwrap();
}
