pub mod quantum_probe {
    use nalgebra::{Complex, DMatrix};
    pub fn probe() -> Vec<f64> {
        let i = Complex::new(0.0, 1.0);
        let m = DMatrix::from_row_slice(2, 2, &[
            Complex::new(2.0, 0.0), Complex::new(0.5, 0.0) + i * 0.25,
            Complex::new(0.5, 0.0) - i * 0.25, Complex::new(1.0, 0.0),
        ]);
        let e = m.symmetric_eigen();
        let mut v: Vec<f64> = e.eigenvalues.iter().cloned().collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }
}
