//! Row norms, the normalisation factor N(M) and membership in S_d.

use grothendieck::linalg::fourier_matrix;
use grothendieck::norms::{norm_report, to_unit_s};
use grothendieck::{ComplexMatrix, Result, C64};

fn main() -> Result<()> {
    let m = ComplexMatrix::from_rows(&[
        vec![C64::new(1.0, 0.0), C64::new(0.0, 2.0)],
        vec![C64::new(0.5, 0.0), C64::new(0.0, 0.0)],
    ])?;
    let r = norm_report(&m)?;
    println!("row norms      {:?}", r.row_norms);
    println!("N(M)           {:.6}", r.n_factor);
    println!("bound chain    {:.6} <= {:.6} <= {:.6}", r.lower_bound, r.n_factor, r.upper_bound);
    println!("in S_d         {}", r.in_s_d);

    let v = to_unit_s(&m)?;
    println!("M/N(M) in S_d  {}", norm_report(&v)?.in_s_d);

    // unitary matrices have all row norms 1, so they lie in S_d unchanged
    let f = fourier_matrix(5);
    println!("F_5 in S_d     {}", norm_report(&f)?.in_s_d);
    Ok(())
}
