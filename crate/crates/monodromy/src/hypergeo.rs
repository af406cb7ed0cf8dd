//! Hypergeometric case construction.
//!
//! A case is a pair of parameter multisets α, β whose entries are rationals
//! in [0, 1). Each Galois-stable multiset determines a product of cyclotomic
//! polynomials (every primitive d-th root of unity enters with equal
//! multiplicity), the polynomials determine companion-matrix generators, and
//! the generators determine a one-dimensional space of invariant
//! antisymmetric forms whose primitive integral representative is the
//! symplectic form the group preserves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{
    invariant_antisymmetric_space, BigRat, ExactError, ExactMatrix, IntPoly,
};

/// Errors from case construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergeoError {
    /// The multiset is not closed under the Galois action: the residues
    /// coprime to `denominator` are not covered with equal multiplicity.
    NonGaloisStable { denominator: u32 },
    /// The space of invariant antisymmetric forms is not one-dimensional.
    AmbiguousForm { dimension: usize },
    /// The invariant form is singular.
    DegenerateForm,
    /// Multiset has the wrong number of entries for this operation.
    WrongSize { expected: usize, got: usize },
    /// Unparseable or out-of-range parameter text.
    InvalidParameter(String),
    /// Generators fail a precondition (non-integral, singular).
    InvalidGenerators(String),
    Exact(ExactError),
}

impl fmt::Display for HypergeoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypergeoError::NonGaloisStable { denominator } => write!(
                f,
                "parameter multiset is not Galois stable: residues coprime to \
                 denominator {denominator} are unbalanced"
            ),
            HypergeoError::AmbiguousForm { dimension } => write!(
                f,
                "invariant antisymmetric form is not unique (solution space has \
                 dimension {dimension})"
            ),
            HypergeoError::DegenerateForm => write!(f, "invariant form is degenerate (det = 0)"),
            HypergeoError::WrongSize { expected, got } => {
                write!(f, "expected {expected} parameters, got {got}")
            }
            HypergeoError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            HypergeoError::InvalidGenerators(msg) => write!(f, "invalid generators: {msg}"),
            HypergeoError::Exact(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for HypergeoError {}

impl From<ExactError> for HypergeoError {
    fn from(e: ExactError) -> Self {
        HypergeoError::Exact(e)
    }
}

/// Multiset of rationals in [0, 1), stored as reduced fractions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParameterMultiset {
    entries: Vec<BigRat>,
}

/// Largest denominator accepted in a parameter multiset. Galois stability
/// already forces phi(d) <= multiset size, so this only guards against
/// pathological input before the stability check runs.
const MAX_DENOMINATOR: u32 = 10_000;

impl ParameterMultiset {
    /// Parses comma-separated fraction text such as `0,0,1/5,2/5,3/5,4/5`.
    pub fn parse(text: &str) -> Result<Self, HypergeoError> {
        let entries = text
            .split(',')
            .map(|tok| parse_fraction(tok.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        ParameterMultiset::new(entries)
    }

    /// Builds from rationals, validating the [0, 1) range.
    pub fn new(entries: Vec<BigRat>) -> Result<Self, HypergeoError> {
        if entries.is_empty() {
            return Err(HypergeoError::InvalidParameter("empty multiset".into()));
        }
        for e in &entries {
            if e.is_negative() || *e >= BigRat::one() {
                return Err(HypergeoError::InvalidParameter(format!(
                    "{e} is outside [0, 1)"
                )));
            }
            if e.denom() > &BigInt::from(MAX_DENOMINATOR) {
                return Err(HypergeoError::InvalidParameter(format!(
                    "denominator of {e} exceeds {MAX_DENOMINATOR}"
                )));
            }
        }
        Ok(ParameterMultiset { entries })
    }

    /// Builds from `(numerator, denominator)` pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self, HypergeoError> {
        ParameterMultiset::new(
            pairs
                .iter()
                .map(|&(p, q)| BigRat::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigRat] {
        &self.entries
    }
}

impl fmt::Display for ParameterMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn parse_fraction(token: &str) -> Result<BigRat, HypergeoError> {
    let bad = |_| HypergeoError::InvalidParameter(format!("cannot parse fraction '{token}'"));
    match token.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(bad)?;
            let q: BigInt = q.trim().parse().map_err(bad)?;
            if q.is_zero() {
                return Err(HypergeoError::InvalidParameter(format!(
                    "zero denominator in '{token}'"
                )));
            }
            Ok(BigRat::new(p, q))
        }
        None => {
            let p: BigInt = token.trim().parse().map_err(bad)?;
            Ok(BigRat::from_integer(p))
        }
    }
}

/// The d-th cyclotomic polynomial, computed exactly by recursive division:
/// Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d.
pub fn cyclotomic(d: u32) -> IntPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let divisors: Vec<u32> = (1..=d).filter(|e| d % e == 0).collect();
    let mut phi: BTreeMap<u32, IntPoly> = BTreeMap::new();
    for &e in &divisors {
        let mut p = IntPoly::x_power_minus_one(e as usize);
        for (&e2, phi_e2) in phi.range(..e) {
            if e % e2 == 0 {
                p = p.exact_div(phi_e2).expect("cyclotomic division is exact");
            }
        }
        phi.insert(e, p);
    }
    phi.remove(&d).unwrap()
}

/// The monic integer polynomial whose roots are exp(2*pi*i*p) over the
/// multiset: the product of Phi_d^{m_d} where m_d is the shared multiplicity
/// of the primitive residues with denominator d. Errors when the multiset is
/// not Galois stable.
pub fn parameters_to_polynomial(params: &ParameterMultiset) -> Result<IntPoly, HypergeoError> {
    // group numerators by reduced denominator
    let mut groups: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for e in params.entries() {
        let d = e.denom().to_u32().expect("denominator bounded by MAX_DENOMINATOR");
        let p = e.numer().to_u32().unwrap_or(0);
        groups.entry(d).or_default().push(p);
    }
    let mut result = IntPoly::one();
    for (d, numerators) in groups {
        let multiplicity = balanced_multiplicity(d, &numerators)
            .ok_or(HypergeoError::NonGaloisStable { denominator: d })?;
        let phi = cyclotomic(d);
        for _ in 0..multiplicity {
            result = result.mul(&phi);
        }
    }
    Ok(result)
}

/// Checks that the numerators cover every residue coprime to `d` with one
/// shared multiplicity, returning it.
fn balanced_multiplicity(d: u32, numerators: &[u32]) -> Option<usize> {
    let coprime: Vec<u32> = if d == 1 {
        vec![0]
    } else {
        (0..d).filter(|k| k.gcd(&d) == 1).collect()
    };
    let mut counts: BTreeMap<u32, usize> = coprime.iter().map(|&k| (k, 0)).collect();
    for &p in numerators {
        match counts.get_mut(&p) {
            Some(c) => *c += 1,
            // reduced fractions are always coprime; defensive for d = 1
            None => return None,
        }
    }
    let m = *counts.values().next()?;
    (m > 0 && counts.values().all(|&c| c == m)).then_some(m)
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal, last
/// column `-(c0, ..., c_{n-1})^t`.
pub fn companion(h: &IntPoly) -> Result<ExactMatrix, HypergeoError> {
    let n = h.degree();
    if n == 0 {
        return Err(HypergeoError::InvalidParameter(
            "companion matrix needs degree >= 1".into(),
        ));
    }
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n - 1 {
        m.set(i + 1, i, BigRat::one());
    }
    for i in 0..n {
        m.set(i, n - 1, -BigRat::from_integer(h.coeff(i)));
    }
    Ok(m)
}

/// Recovers the integral symplectic form preserved by both generators:
/// solves for antisymmetric X with A^t X A = X and B^t X B = X, requires the
/// solution space to be exactly one-dimensional, and returns the primitive
/// integral representative with positive (1,2) entry (falling back to the
/// first nonzero superdiagonal entry, then to the first nonzero
/// upper-triangular entry in row-major order).
pub fn invariant_symplectic_form(
    a: &ExactMatrix,
    b: &ExactMatrix,
) -> Result<ExactMatrix, HypergeoError> {
    for (name, g) in [("A", a), ("B", b)] {
        if !g.is_integral() {
            return Err(HypergeoError::InvalidGenerators(format!(
                "{name} has non-integer entries"
            )));
        }
        if g.det()?.is_zero() {
            return Err(HypergeoError::InvalidGenerators(format!("{name} is singular")));
        }
    }
    let basis = invariant_antisymmetric_space(&[a, b])?;
    if basis.len() != 1 {
        return Err(HypergeoError::AmbiguousForm {
            dimension: basis.len(),
        });
    }
    let mut omega = basis.into_iter().next().unwrap();
    if sign_reference(&omega).is_negative() {
        omega = -&omega;
    }
    if omega.det()?.is_zero() {
        return Err(HypergeoError::DegenerateForm);
    }
    Ok(omega)
}

/// The entry that fixes the global sign of an antisymmetric form.
fn sign_reference(omega: &ExactMatrix) -> BigRat {
    let n = omega.rows();
    if !omega.at(0, 1).is_zero() {
        return omega.at(0, 1).clone();
    }
    for i in 1..n - 1 {
        if !omega.at(i, i + 1).is_zero() {
            return omega.at(i, i + 1).clone();
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if !omega.at(i, j).is_zero() {
                return omega.at(i, j).clone();
            }
        }
    }
    BigRat::one()
}

/// A fully assembled hypergeometric case.
#[derive(Clone, Debug)]
pub struct HyperCase {
    pub label: String,
    pub alpha: ParameterMultiset,
    pub beta: ParameterMultiset,
    pub f: IntPoly,
    pub g: IntPoly,
    /// Generator A = C(f).
    pub a_mat: ExactMatrix,
    /// Generator B = C(g).
    pub b_mat: ExactMatrix,
    /// Cached exact inverse of A.
    pub a_inv: ExactMatrix,
    /// Cached exact inverse of B.
    pub b_inv: ExactMatrix,
    /// Primitive integral symplectic form preserved by A and B.
    pub omega: ExactMatrix,
    /// Non-fatal oddities noticed during construction.
    pub warnings: Vec<String>,
}

impl HyperCase {
    /// The standard rank-one unipotent T = A^{-1} B.
    pub fn t_matrix(&self) -> ExactMatrix {
        &self.a_inv * &self.b_mat
    }

    pub fn degree(&self) -> usize {
        self.f.degree()
    }
}

/// Builds and validates a degree-six case.
pub fn build_case(
    label: &str,
    alpha: ParameterMultiset,
    beta: ParameterMultiset,
) -> Result<HyperCase, HypergeoError> {
    for p in [&alpha, &beta] {
        if p.len() != 6 {
            return Err(HypergeoError::WrongSize {
                expected: 6,
                got: p.len(),
            });
        }
    }
    build_case_any_degree(label, alpha, beta)
}

/// Builds a case of any degree (the parameter multisets must have equal
/// size). Degree six is the supported regime; this lifts the restriction
/// for experimentation.
pub fn build_case_any_degree(
    label: &str,
    alpha: ParameterMultiset,
    beta: ParameterMultiset,
) -> Result<HyperCase, HypergeoError> {
    if alpha.len() != beta.len() {
        return Err(HypergeoError::WrongSize {
            expected: alpha.len(),
            got: beta.len(),
        });
    }
    let f = parameters_to_polynomial(&alpha)?;
    let g = parameters_to_polynomial(&beta)?;
    let mut warnings = Vec::new();
    if f == g {
        warnings.push("alpha and beta give the same polynomial".to_string());
    }
    if !f.is_self_reciprocal() {
        warnings.push(format!("f = {f} is not self-reciprocal"));
    }
    if !g.is_self_reciprocal() {
        warnings.push(format!("g = {g} is not self-reciprocal"));
    }
    let a_mat = companion(&f)?;
    let b_mat = companion(&g)?;
    let omega = invariant_symplectic_form(&a_mat, &b_mat)?;
    debug_assert_eq!(&(&a_mat.transpose() * &omega) * &a_mat, omega);
    debug_assert_eq!(&(&b_mat.transpose() * &omega) * &b_mat, omega);
    let a_inv = a_mat.inverse()?;
    let b_inv = b_mat.inverse()?;
    Ok(HyperCase {
        label: label.to_string(),
        alpha,
        beta,
        f,
        g,
        a_mat,
        b_mat,
        a_inv,
        b_inv,
        omega,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;

    #[test]
    fn cyclotomic_small_table() {
        let cases: &[(u32, &[i64])] = &[
            (1, &[-1, 1]),
            (2, &[1, 1]),
            (3, &[1, 1, 1]),
            (4, &[1, 0, 1]),
            (5, &[1, 1, 1, 1, 1]),
            (6, &[1, -1, 1]),
            (8, &[1, 0, 0, 0, 1]),
            (12, &[1, 0, -1, 0, 1]),
        ];
        for (d, coeffs) in cases {
            assert_eq!(cyclotomic(*d), IntPoly::from_i64(coeffs).unwrap(), "Phi_{d}");
        }
    }

    #[test]
    fn cyclotomic_product_over_divisors_is_x_n_minus_one() {
        for n in 1..=16u32 {
            let mut product = IntPoly::one();
            for e in 1..=n {
                if n % e == 0 {
                    product = product.mul(&cyclotomic(e));
                }
            }
            assert_eq!(product, IntPoly::x_power_minus_one(n as usize));
        }
    }

    #[test]
    fn paper_polynomials_from_parameters() {
        let cases: &[(&str, &[i64])] = &[
            ("0,0,1/5,2/5,3/5,4/5", &[1, -1, 0, 0, 0, -1, 1]),
            ("1/2,1/2,1/3,1/3,2/3,2/3", &[1, 4, 8, 10, 8, 4, 1]),
            ("0,0,1/8,3/8,5/8,7/8", &[1, -2, 0, 1, 0, -2, 1]),
            ("1/2,1/2,1/12,5/12,7/12,11/12", &[1, 2, 0, -2, 0, 2, 1]),
        ];
        for (text, coeffs) in cases {
            let params = ParameterMultiset::parse(text).unwrap();
            let poly = parameters_to_polynomial(&params).unwrap();
            assert_eq!(poly, IntPoly::from_i64(coeffs).unwrap(), "{text}");
        }
    }

    #[test]
    fn all_zero_parameters_give_x_minus_one_to_the_sixth() {
        let params = ParameterMultiset::parse("0,0,0,0,0,0").unwrap();
        let poly = parameters_to_polynomial(&params).unwrap();
        assert_eq!(poly, IntPoly::from_i64(&[1, -6, 15, -20, 15, -6, 1]).unwrap());
    }

    #[test]
    fn unbalanced_multiset_is_rejected() {
        let params = ParameterMultiset::parse("1/5,0,0,0,0,0").unwrap();
        assert_eq!(
            parameters_to_polynomial(&params).unwrap_err(),
            HypergeoError::NonGaloisStable { denominator: 5 }
        );
    }

    #[test]
    fn multiplicity_two_requires_full_double_coverage() {
        // 1/3 twice but 2/3 once: unbalanced
        let params = ParameterMultiset::parse("1/3,1/3,2/3,0,0,0").unwrap();
        assert_eq!(
            parameters_to_polynomial(&params).unwrap_err(),
            HypergeoError::NonGaloisStable { denominator: 3 }
        );
        // 1/3, 2/3 each twice: fine
        let params = ParameterMultiset::parse("1/3,1/3,2/3,2/3,0,0").unwrap();
        assert!(parameters_to_polynomial(&params).is_ok());
    }

    #[test]
    fn parse_rejects_out_of_range_and_garbage() {
        assert!(ParameterMultiset::parse("1,0,0,0,0,0").is_err());
        assert!(ParameterMultiset::parse("-1/5,0,0,0,0,0").is_err());
        assert!(ParameterMultiset::parse("x,0,0,0,0,0").is_err());
        assert!(ParameterMultiset::parse("1/0,0,0,0,0,0").is_err());
    }

    #[test]
    fn companion_of_pure_power() {
        let m = companion(&IntPoly::x_power(6)).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let expected = i64::from(j + 1 == i);
                assert_eq!(m.at(i, j), &crate::exact::rat(expected));
            }
        }
    }

    #[test]
    fn companion_of_f47_has_expected_last_column() {
        let f47 = IntPoly::from_i64(&[1, -1, 0, 0, 0, -1, 1]).unwrap();
        let m = companion(&f47).unwrap();
        let last: Vec<i64> = vec![-1, 1, 0, 0, 0, 1];
        for (i, &v) in last.iter().enumerate() {
            assert_eq!(m.at(i, 5), &crate::exact::rat(v));
        }
        // companion-matrix property
        assert_eq!(m.char_poly().unwrap(), f47);
    }

    #[test]
    fn invariant_form_matches_pinned_c47() {
        let case = registry::builtin_case("C-47").unwrap();
        assert_eq!(case.omega, registry::pinned_omega("C-47").unwrap());
        assert_eq!(case.omega.det().unwrap(), crate::exact::rat(1679616));
    }

    #[test]
    fn invariant_form_matches_pinned_c55() {
        let case = registry::builtin_case("C-55").unwrap();
        assert_eq!(case.omega, registry::pinned_omega("C-55").unwrap());
        assert_eq!(case.omega.det().unwrap(), crate::exact::rat(4096));
    }

    #[test]
    fn identity_generators_make_the_form_ambiguous() {
        let id = ExactMatrix::identity(6);
        assert_eq!(
            invariant_symplectic_form(&id, &id).unwrap_err(),
            HypergeoError::AmbiguousForm { dimension: 15 }
        );
    }

    #[test]
    fn built_cases_satisfy_the_stated_invariants() {
        for label in registry::builtin_labels() {
            let case = registry::builtin_case(label).unwrap();
            let at_omega_a = &(&case.a_mat.transpose() * &case.omega) * &case.a_mat;
            let bt_omega_b = &(&case.b_mat.transpose() * &case.omega) * &case.b_mat;
            assert_eq!(at_omega_a, case.omega, "{label}: A^t Omega A");
            assert_eq!(bt_omega_b, case.omega, "{label}: B^t Omega B");
            assert!(case.omega.is_antisymmetric());
            assert!(case.omega.is_integral());
            assert!(!case.omega.det().unwrap().is_zero());
            // Cayley-Hamilton: f(A) = 0 and g(B) = 0 as exact matrix identities
            assert!(case.f.eval_matrix(&case.a_mat).unwrap().is_zero());
            assert!(case.g.eval_matrix(&case.b_mat).unwrap().is_zero());
            assert!(case.warnings.is_empty(), "{label}: {:?}", case.warnings);
        }
    }

    #[test]
    fn build_case_requires_six_parameters() {
        let short = ParameterMultiset::parse("0,0").unwrap();
        let beta = ParameterMultiset::parse("1/2,1/2,1/3,1/3,2/3,2/3").unwrap();
        assert!(matches!(
            build_case("short", short.clone(), beta),
            Err(HypergeoError::WrongSize { expected: 6, got: 2 })
        ));
        // the any-degree entry point accepts it when sizes agree
        let alpha2 = ParameterMultiset::parse("0,0").unwrap();
        let beta2 = ParameterMultiset::parse("1/2,1/2").unwrap();
        let case = build_case_any_degree("deg2", alpha2, beta2).unwrap();
        assert_eq!(case.degree(), 2);
        assert!(build_case_any_degree("mismatch", short, ParameterMultiset::parse("0").unwrap()).is_err());
    }

    #[test]
    fn same_polynomials_produce_a_warning() {
        let alpha = ParameterMultiset::parse("0,0,1/5,2/5,3/5,4/5").unwrap();
        let case = build_case("same", alpha.clone(), alpha);
        // identical generators leave a 3-dimensional space of invariant forms
        match case {
            Err(HypergeoError::AmbiguousForm { dimension }) => assert!(dimension > 1),
            Ok(c) => assert!(!c.warnings.is_empty()),
            Err(e) => panic!("unexpected error: {e}"),
        }
    }
}
