//! Alternating multilinear forms with values in ℝ^m, over exact rationals.
//!
//! A form of degree k on an n-dimensional space stores one ℝ^m value per
//! strictly increasing k-tuple of basis indices, so alternation is a property
//! of the storage, not something callers must maintain. Scalar forms are the
//! m = 1 case; they house η_i, dη_i, Φ_i, torsion 3-forms and the c-form,
//! while m = 3 houses the 𝔳-valued cocycles θ of central extensions.

use crate::linalg::Matrix;
use crate::rational::Rational;
use num_traits::Zero;

/// Binomial coefficient, exact in usize range (dimensions here are tiny).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as usize
}

/// All strictly increasing k-tuples from {0..n}, lexicographically ordered.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Lexicographic rank of a strictly increasing tuple among all k-subsets.
fn tuple_rank(n: usize, t: &[usize]) -> usize {
    let k = t.len();
    let mut rank = 0;
    let mut prev: isize = -1;
    for (i, &ti) in t.iter().enumerate() {
        for j in (prev + 1) as usize..ti {
            rank += binomial(n - 1 - j, k - 1 - i);
        }
        prev = ti as isize;
    }
    rank
}

/// Sorts the tuple, returning (sorted, sign) or None when an index repeats.
fn sort_with_sign(t: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = t.to_vec();
    let mut sign = 1;
    // insertion sort, counting transpositions — tuples are tiny
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorValuedForm {
    n: usize,
    degree: usize,
    target_dim: usize,
    /// coeffs[rank of increasing tuple] = value in ℝ^m.
    coeffs: Vec<Vec<Rational>>,
}

impl VectorValuedForm {
    pub fn zero(n: usize, degree: usize, target_dim: usize) -> Self {
        assert!(degree >= 1, "forms here have degree ≥ 1");
        assert!(target_dim >= 1);
        VectorValuedForm {
            n,
            degree,
            target_dim,
            coeffs: vec![vec![Rational::zero(); target_dim]; binomial(n, degree)],
        }
    }

    /// Builds a form by evaluating `f` on every strictly increasing tuple.
    pub fn from_fn(
        n: usize,
        degree: usize,
        target_dim: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Rational>,
    ) -> Self {
        let mut form = VectorValuedForm::zero(n, degree, target_dim);
        for t in increasing_tuples(n, degree) {
            let v = f(&t);
            assert_eq!(v.len(), target_dim);
            form.coeffs[tuple_rank(n, &t)] = v;
        }
        form
    }

    /// Degree-1 scalar form with the given coefficients (a covector).
    pub fn from_covector(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut form = VectorValuedForm::zero(n, 1, 1);
        for (i, c) in coeffs.iter().enumerate() {
            form.coeffs[i] = vec![c.clone()];
        }
        form
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Rational::is_zero)
    }

    /// Coefficient at a strictly increasing tuple.
    pub fn coeff(&self, t: &[usize]) -> &[Rational] {
        assert!(t.windows(2).all(|w| w[0] < w[1]), "tuple must be increasing");
        assert_eq!(t.len(), self.degree);
        &self.coeffs[tuple_rank(self.n, t)]
    }

    pub fn set_coeff(&mut self, t: &[usize], value: Vec<Rational>) {
        assert!(t.windows(2).all(|w| w[0] < w[1]), "tuple must be increasing");
        assert_eq!(t.len(), self.degree);
        assert_eq!(value.len(), self.target_dim);
        self.coeffs[tuple_rank(self.n, t)] = value;
    }

    /// Value on an arbitrary tuple of basis vectors (sign-adjusted; zero on
    /// repeats).
    pub fn value_on_basis(&self, t: &[usize]) -> Vec<Rational> {
        assert_eq!(t.len(), self.degree);
        match sort_with_sign(t) {
            None => vec![Rational::zero(); self.target_dim],
            Some((sorted, sign)) => {
                let v = self.coeff(&sorted);
                if sign == 1 {
                    v.to_vec()
                } else {
                    v.iter().map(|x| -x).collect()
                }
            }
        }
    }

    /// Full multilinear evaluation on arbitrary coordinate vectors.
    pub fn eval(&self, args: &[&[Rational]]) -> Vec<Rational> {
        assert_eq!(args.len(), self.degree);
        for a in args {
            assert_eq!(a.len(), self.n);
        }
        let mut out = vec![Rational::zero(); self.target_dim];
        for t in increasing_tuples(self.n, self.degree) {
            let c = &self.coeffs[tuple_rank(self.n, &t)];
            if c.iter().all(Rational::is_zero) {
                continue;
            }
            let minor = Matrix::from_fn(self.degree, self.degree, |r, s| args[r][t[s]].clone());
            let d = minor.det();
            if d.is_zero() {
                continue;
            }
            for (o, ci) in out.iter_mut().zip(c) {
                *o = &*o + &(&d * ci);
            }
        }
        out
    }

    /// Scalar evaluation (target dimension must be 1).
    pub fn eval_scalar(&self, args: &[&[Rational]]) -> Rational {
        assert_eq!(self.target_dim, 1);
        self.eval(args).pop().unwrap()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map(|a| a * s)
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        VectorValuedForm {
            n: self.n,
            degree: self.degree,
            target_dim: self.target_dim,
            coeffs: self
                .coeffs
                .iter()
                .map(|v| v.iter().map(&f).collect())
                .collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(
            (self.n, self.degree, self.target_dim),
            (other.n, other.degree, other.target_dim),
            "form shape mismatch"
        );
        VectorValuedForm {
            n: self.n,
            degree: self.degree,
            target_dim: self.target_dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
                .collect(),
        }
    }

    /// Interior product v ⌟ ω (degree drops by one).
    pub fn contract(&self, v: &[Rational]) -> Self {
        assert_eq!(v.len(), self.n);
        assert!(self.degree >= 1);
        if self.degree == 1 {
            // result is a "0-form": represent as the value itself is not a
            // form; callers use eval for that. Degree-1 contraction is not
            // needed, keep the invariant strict.
            panic!("contract on a 1-form: use eval instead");
        }
        let mut out = VectorValuedForm::zero(self.n, self.degree - 1, self.target_dim);
        for t in increasing_tuples(self.n, self.degree - 1) {
            let mut acc = vec![Rational::zero(); self.target_dim];
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() {
                    continue;
                }
                let mut full = Vec::with_capacity(self.degree);
                full.push(i);
                full.extend_from_slice(&t);
                let val = self.value_on_basis(&full);
                for (a, x) in acc.iter_mut().zip(&val) {
                    *a = &*a + &(vi * x);
                }
            }
            out.set_coeff(&t, acc);
        }
        out
    }

    /// Wedge product of scalar forms (determinant convention,
    /// (e¹∧e²)(e₁,e₂) = 1).
    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        assert_eq!(self.target_dim, 1, "wedge is for scalar forms");
        assert_eq!(other.target_dim, 1, "wedge is for scalar forms");
        let p = self.degree;
        let q = other.degree;
        let mut out = VectorValuedForm::zero(self.n, p + q, 1);
        if p + q > self.n {
            return out; // top degree exceeded: identically zero
        }
        let position_subsets = increasing_tuples(p + q, p);
        for t in increasing_tuples(self.n, p + q) {
            let mut acc = Rational::zero();
            for s in &position_subsets {
                // split positions of t into S (for self) and complement
                let mut in_s = vec![false; p + q];
                for &pos in s {
                    in_s[pos] = true;
                }
                let left: Vec<usize> = s.iter().map(|&pos| t[pos]).collect();
                let right: Vec<usize> = (0..p + q).filter(|&pos| !in_s[pos]).map(|pos| t[pos]).collect();
                // shuffle sign: parity of the permutation (left, right) of t
                let mut concat = left.clone();
                concat.extend_from_slice(&right);
                let (_, sign) = sort_with_sign(&concat).expect("tuple entries distinct");
                let term = &self.coeff(&left)[0] * &other.coeff(&right)[0];
                if sign == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            out.set_coeff(&t, vec![acc]);
        }
        out
    }

    /// Splits a vector-valued form into its scalar component forms.
    pub fn components(&self) -> Vec<VectorValuedForm> {
        (0..self.target_dim)
            .map(|c| {
                let mut f = VectorValuedForm::zero(self.n, self.degree, 1);
                for (rank, v) in self.coeffs.iter().enumerate() {
                    f.coeffs[rank] = vec![v[c].clone()];
                }
                f
            })
            .collect()
    }

    /// Assembles a vector-valued form from scalar components.
    pub fn from_components(parts: &[VectorValuedForm]) -> Self {
        assert!(!parts.is_empty());
        let n = parts[0].n;
        let degree = parts[0].degree;
        for p in parts {
            assert_eq!((p.n, p.degree, p.target_dim), (n, degree, 1));
        }
        let mut out = VectorValuedForm::zero(n, degree, parts.len());
        for rank in 0..out.coeffs.len() {
            out.coeffs[rank] = parts.iter().map(|p| p.coeffs[rank][0].clone()).collect();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_vec;
    use crate::rational::{rat, rint};

    fn e(n: usize, i: usize) -> Vec<Rational> {
        basis_vec(n, i)
    }

    #[test]
    fn tuple_rank_is_lexicographic() {
        let all = increasing_tuples(5, 3);
        for (i, t) in all.iter().enumerate() {
            assert_eq!(tuple_rank(5, t), i);
        }
        assert_eq!(all.len(), binomial(5, 3));
    }

    #[test]
    fn alternation_is_enforced_by_storage() {
        let mut w = VectorValuedForm::zero(3, 2, 1);
        w.set_coeff(&[0, 2], vec![rint(5)]);
        assert_eq!(w.value_on_basis(&[2, 0]), vec![rint(-5)]);
        assert_eq!(w.value_on_basis(&[0, 0]), vec![rint(0)]);
        assert_eq!(w.eval_scalar(&[&e(3, 0), &e(3, 2)]), rint(5));
        assert_eq!(w.eval_scalar(&[&e(3, 2), &e(3, 0)]), rint(-5));
    }

    #[test]
    fn evaluation_is_multilinear() {
        // ω = e⁰∧e¹ on mixed vectors: ω(a e0 + b e1, e1) = a
        let mut w = VectorValuedForm::zero(2, 2, 1);
        w.set_coeff(&[0, 1], vec![rint(1)]);
        let x = vec![rat(1, 2), rat(3, 4)];
        assert_eq!(w.eval_scalar(&[&x, &e(2, 1)]), rat(1, 2));
    }

    #[test]
    fn wedge_of_one_forms_matches_determinant() {
        let a = VectorValuedForm::from_covector(&[rint(1), rint(0), rint(0)]);
        let b = VectorValuedForm::from_covector(&[rint(0), rint(1), rint(0)]);
        let ab = a.wedge(&b);
        assert_eq!(ab.coeff(&[0, 1]), &[rint(1)]);
        assert_eq!(ab.coeff(&[0, 2]), &[rint(0)]);
        // antisymmetry of wedge on 1-forms
        assert_eq!(b.wedge(&a).coeff(&[0, 1]), &[rint(-1)]);
    }

    #[test]
    fn wedge_one_form_with_two_form() {
        // (η∧ω)(x,y,z) = η(x)ω(y,z) − η(y)ω(x,z) + η(z)ω(x,y)
        let eta = VectorValuedForm::from_covector(&[rint(1), rint(0), rint(0)]);
        let mut omega = VectorValuedForm::zero(3, 2, 1);
        omega.set_coeff(&[1, 2], vec![rint(7)]);
        let t = eta.wedge(&omega);
        assert_eq!(t.coeff(&[0, 1, 2]), &[rint(7)]);
        // and it is symmetric: ω∧η = η∧ω for (1,2)-degrees (sign (−1)^{1·2}=1)
        assert_eq!(omega.wedge(&eta), t);
    }

    #[test]
    fn triple_wedge_of_duals() {
        let n = 5;
        let f1 = VectorValuedForm::from_covector(&basis_vec(n, 2));
        let f2 = VectorValuedForm::from_covector(&basis_vec(n, 3));
        let f3 = VectorValuedForm::from_covector(&basis_vec(n, 4));
        let w = f1.wedge(&f2).wedge(&f3);
        assert_eq!(w.coeff(&[2, 3, 4]), &[rint(1)]);
        assert_eq!(
            w.eval_scalar(&[&e(n, 4), &e(n, 3), &e(n, 2)]),
            rint(-1)
        );
    }

    #[test]
    fn contraction_drops_degree() {
        let mut w = VectorValuedForm::zero(3, 2, 1);
        w.set_coeff(&[0, 1], vec![rint(2)]);
        w.set_coeff(&[1, 2], vec![rint(3)]);
        let c = w.contract(&e(3, 1)); // ι_{e1} ω
        assert_eq!(c.coeff(&[0]), &[rint(-2)]); // ω(e1, e0) = −2
        assert_eq!(c.coeff(&[2]), &[rint(3)]); // ω(e1, e2) = 3
    }

    #[test]
    fn vector_valued_components_round_trip() {
        let mut w = VectorValuedForm::zero(3, 2, 2);
        w.set_coeff(&[0, 1], vec![rint(1), rint(2)]);
        w.set_coeff(&[0, 2], vec![rint(3), rint(4)]);
        let parts = w.components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[1].coeff(&[0, 2]), &[rint(4)]);
        assert_eq!(VectorValuedForm::from_components(&parts), w);
    }
}
