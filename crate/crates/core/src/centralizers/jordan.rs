use crate::field::Field;
use crate::matrix::Matrix;

/// `x = s + n` with `s` semisimple, `n` nilpotent, `[s, n] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair<F> {
    pub s: Matrix<F>,
    pub n: Matrix<F>,
}

/// Jordan–Chevalley decomposition. With `q` the squarefree part of the
/// characteristic polynomial, Newton's iteration `s ← s − q(s) q′(s)⁻¹`
/// starting at `x` converges in finitely many steps to the semisimple part,
/// which is a polynomial in `x`.
pub fn jordan_decompose<F: Field>(x: &Matrix<F>) -> JordanPair<F> {
    assert!(x.is_square());
    let q = x.charpoly().squarefree_part();
    let dq = q.derivative();
    let mut s = x.clone();
    loop {
        let qs = q.eval_matrix(&s);
        if qs.is_zero() {
            break;
        }
        let inv = dq.eval_matrix(&s).inverse().expect("q'(s) is invertible");
        s = s.sub_ref(&qs.mul_ref(&inv));
    }
    let n = x.sub_ref(&s);
    JordanPair { s, n }
}

impl<F: Field> JordanPair<F> {
    /// Checks the defining properties directly.
    pub fn check(&self, x: &Matrix<F>) -> bool {
        let dim = x.rows() as u32;
        let commute = self.s.bracket(&self.n).is_zero();
        let nilpotent = self.n.pow(dim).is_zero();
        let sum = self.s.add_ref(&self.n) == *x;
        // minimal polynomial of s squarefree: the squarefree part of its
        // characteristic polynomial annihilates it
        let semisimple = self.s.charpoly().squarefree_part().eval_matrix(&self.s).is_zero();
        commute && nilpotent && sum && semisimple
    }
}
