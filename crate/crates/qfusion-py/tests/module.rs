use pyo3::prelude::*;
use pyo3::types::PyList;
use qfusion_py::qfusion_py;

fn with_module<R>(f: impl FnOnce(&Bound<'_, PyModule>) -> PyResult<R>) -> R {
    pyo3::append_to_inittab!(qfusion_py);
    Python::initialize();
    Python::attach(|py| {
        let m = py.import("qfusion").unwrap();
        f(&m).unwrap()
    })
}

#[test]
fn module_round_trip() {
    with_module(|m| {
        let prod: Vec<(Vec<usize>, i64, u64)> = m
            .getattr("quantum_product")?
            .call1((2, 5, vec![3, 2], vec![2, 1]))?
            .extract()?;
        assert_eq!(prod, vec![(vec![2, 1], 1, 1), (vec![3], 1, 1)]);

        let t = m.getattr("CoeffTable")?.call_method1("gw", (2, 5))?;
        let d: (i64, u64) = t.call_method1("get", (vec![3, 2], vec![2, 1], vec![3]))?.extract()?;
        assert_eq!(d, (1, 1));
        let json: String = t.call_method0("to_json")?.extract()?;
        let back = m.getattr("CoeffTable")?.call_method1("from_json", (json,))?;
        assert!(back.eq(&t)?);

        let err = m.getattr("fusion_coeff")?.call1((3, 2, vec![1, 2], vec![1], vec![1]));
        assert!(err
            .unwrap_err()
            .is_instance_of::<pyo3::exceptions::PyValueError>(m.py()));

        let pi = m.getattr("word_to_multipartition")?.call1((vec![0, 1, 2, 0], 3))?;
        assert!(pi.is_instance_of::<PyList>());
        let w: Vec<usize> = m.getattr("multipartition_to_word")?.call1((pi,))?.extract()?;
        assert_eq!(w.len(), 4);
        Ok(())
    });
}
