//! Topological invariants of torus knots on the Heegaard torus of `L(p,q)`.
//!
//! `L(p,q) = V1 ∪ V2`, glued so that the meridian `μ1` of `V1` becomes the
//! curve `-q μ2 + p λ2` on `∂V2`. A torus knot `K(a,b)` is the class
//! `a μ2 + b λ2` on `∂V2` with `gcd(a,b) = 1`. Knots are oriented: `(a,b)` and
//! `(-a,-b)` are only identified where the isotopy classification says so.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rational};
use crate::error::Error;

/// A lens space `L(p,q)` together with gluing data `p q' + q p' = 1`,
/// normalised so that `q p' ≡ 1 (mod p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: Int,
    q: Int,
    p_prime: Int,
    q_prime: Int,
    compat: bool,
}

impl LensSpace {
    pub fn new(p: impl Into<Int>, q: impl Into<Int>) -> Result<Self, Error> {
        let (p, q) = (p.into(), q.into());
        if p < Int::from(2) {
            return Err(Error::InvalidLensSpace(alloc::format!("p must be at least 2, got {p}")));
        }
        if !(q.is_positive() && q < p) {
            return Err(Error::InvalidLensSpace(alloc::format!(
                "q must satisfy 0 < q < p, got p={p}, q={q}"
            )));
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::InvalidLensSpace("gcd(p,q) must be 1".into()));
        }
        // q p' ≡ 1 (mod p), then q' = (1 - q p') / p
        let inv = q.extended_gcd(&p).x.mod_floor(&p);
        let q_prime = (Int::one() - &q * &inv) / &p;
        Ok(LensSpace { p, q, p_prime: inv, q_prime, compat: false })
    }

    /// The degenerate pair `(p,q) = (1,0)`, i.e. `S^3` with its genus-one
    /// splitting. Only meant for checking that formulas specialise to the
    /// classical torus-knot values.
    pub fn s3_compat() -> Self {
        LensSpace {
            p: Int::one(),
            q: Int::zero(),
            p_prime: Int::zero(),
            q_prime: Int::one(),
            compat: true,
        }
    }

    pub fn p(&self) -> &Int {
        &self.p
    }

    pub fn q(&self) -> &Int {
        &self.q
    }

    pub fn p_prime(&self) -> &Int {
        &self.p_prime
    }

    pub fn q_prime(&self) -> &Int {
        &self.q_prime
    }

    pub fn is_s3_compat(&self) -> bool {
        self.compat
    }

    /// `-p/q` as a rational; `None` for the compatibility space.
    pub fn meridian_slope(&self) -> Option<Rational> {
        (!self.compat).then(|| Rational::new(-&self.p, self.q.clone()).expect("q > 0"))
    }

    /// `q = p - 1`.
    pub fn is_q_p_minus_one(&self) -> bool {
        self.q == &self.p - 1
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// An oriented `(a,b)` curve on `∂V2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusKnot {
    a: Int,
    b: Int,
}

impl TorusKnot {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>) -> Result<Self, Error> {
        let (a, b) = (a.into(), b.into());
        if !a.gcd(&b).is_one() {
            return Err(Error::InvalidKnot { a, b });
        }
        Ok(TorusKnot { a, b })
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn b(&self) -> &Int {
        &self.b
    }

    /// The same curve with the opposite orientation.
    pub fn reversed(&self) -> TorusKnot {
        TorusKnot { a: -&self.a, b: -&self.b }
    }

    /// `p a + q b`, the exponent of the second generator of the knot group.
    pub fn pa_qb(&self, lens: &LensSpace) -> Int {
        &lens.p * &self.a + &lens.q * &self.b
    }

    /// Builds `(num/p, b)` when `p | num` and the pair is coprime.
    fn divided(num: Int, b: Int, p: &Int) -> Option<TorusKnot> {
        let (a, rem) = num.div_rem(p);
        rem.is_zero().then_some(())?;
        TorusKnot::new(a, b).ok()
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.a, self.b)
    }
}

/// Order, meridian-disk counts and Euler characteristic of the rational
/// Seifert surface built from `|m|` meridian disks of `V1`, `|l|` of `V2` and
/// `|l||rb|` half-twisted bands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    pub order: Int,
    pub m: Int,
    pub l: Int,
    pub chi: Rational,
}

/// `⟨u, v | u^exp_u = v^exp_v⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotGroupPresentation {
    pub exp_u: Int,
    pub exp_v: Int,
}

impl fmt::Display for KnotGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<u, v | u^{} = v^{}>", self.exp_u, self.exp_v)
    }
}

/// Mapping class group of `L(p,q)`, by the residue of `q` and `q²` mod `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiffeotopyGroup {
    /// `Z2` generated by `τ`, when `q² ≢ ±1 (mod p)`.
    Z2Tau,
    /// `Z2 ⊕ Z2` generated by `τ, σ+`, when `q² ≡ 1` but `q ≢ ±1`.
    Z2xZ2,
    /// `Z2` generated by `τ`, when `q ≡ ±1` and `p ≠ 2`.
    Z2TauOnly,
    /// `Z4` generated by `σ-`, when `q² ≡ -1` and `p ≠ 2`.
    Z4SigmaMinus,
    /// `Z2` generated by `σ-`, when `p = 2`.
    Z2SigmaMinus,
}

impl DiffeotopyGroup {
    pub fn label(self) -> &'static str {
        match self {
            DiffeotopyGroup::Z2Tau => "Z2_tau",
            DiffeotopyGroup::Z2xZ2 => "Z2xZ2",
            DiffeotopyGroup::Z2TauOnly => "Z2_tau_only",
            DiffeotopyGroup::Z4SigmaMinus => "Z4_sigma_minus",
            DiffeotopyGroup::Z2SigmaMinus => "Z2_sigma_minus",
        }
    }
}

/// Smallest `r >= 1` with `p | r b`.
pub fn order(lens: &LensSpace, knot: &TorusKnot) -> Int {
    &lens.p / lens.p.gcd(&knot.b)
}

pub fn is_null_homologous(lens: &LensSpace, knot: &TorusKnot) -> bool {
    knot.b.is_multiple_of(&lens.p)
}

pub fn seifert_data(lens: &LensSpace, knot: &TorusKnot) -> SeifertData {
    let (p, q) = (&lens.p, &lens.q);
    let (a, b) = (&knot.a, &knot.b);
    let r = order(lens, knot);
    let rb = &r * b;
    let m = &rb / p;
    let l = &r * a + &m * q;
    let rb_abs = rb.abs();
    let twisted = (&r * a * p + &rb * q).abs();
    let chi_num = &rb_abs + (Int::one() - &rb_abs) * twisted;
    let chi = Rational::new(chi_num, p.clone()).expect("p > 0");
    SeifertData { order: r, m, l, chi }
}

pub fn knot_group(lens: &LensSpace, knot: &TorusKnot) -> KnotGroupPresentation {
    KnotGroupPresentation { exp_u: knot.b.clone(), exp_v: knot.pa_qb(lens) }
}

fn group_signature(lens: &LensSpace, knot: &TorusKnot) -> [Int; 2] {
    let mut sig = [knot.b.abs(), knot.pa_qb(lens).abs()];
    sig.sort();
    sig
}

/// Compares the multisets `{|b|, |pa+qb|}`.
pub fn groups_isomorphic(lens: &LensSpace, k1: &TorusKnot, k2: &TorusKnot) -> bool {
    group_signature(lens, k1) == group_signature(lens, k2)
}

fn push_unique(out: &mut Vec<TorusKnot>, k: Option<TorusKnot>) {
    if let Some(k) = k {
        if !out.contains(&k) {
            out.push(k);
        }
    }
}

/// The images `B, C, D` (and negatives) of `K` that can share its knot group.
struct Candidates {
    b: [Option<TorusKnot>; 2],
    c: [Option<TorusKnot>; 2],
    d: [Option<TorusKnot>; 2],
}

fn candidates(lens: &LensSpace, knot: &TorusKnot) -> Candidates {
    let (p, q) = (&lens.p, &lens.q);
    let (a, b) = (&knot.a, &knot.b);
    let pa = p * a;
    let q2b = q * q * b;
    let qpa = q * &pa;
    let s = knot.pa_qb(lens);

    let b_num = -(Int::from(2) * q * b) - &pa;
    let c_num = b - &qpa - &q2b;
    let d_num = b + &qpa + &q2b;
    Candidates {
        b: [
            TorusKnot::divided(b_num.clone(), b.clone(), p),
            TorusKnot::divided(-b_num, -b, p),
        ],
        c: [
            TorusKnot::divided(c_num.clone(), s.clone(), p),
            TorusKnot::divided(-c_num, -&s, p),
        ],
        d: [
            TorusKnot::divided(d_num.clone(), -&s, p),
            TorusKnot::divided(-d_num, s, p),
        ],
    }
}

fn q_squared_residue(lens: &LensSpace) -> (bool, bool) {
    let q2 = &lens.q * &lens.q;
    let plus = (&q2 - 1u32).is_multiple_of(&lens.p);
    let minus = (&q2 + 1u32).is_multiple_of(&lens.p);
    (plus, minus)
}

/// Every `(a', b')` whose group could be isomorphic to that of `K`, branching
/// on null-homology, `p = 2` and `q² ≡ ±1 (mod p)`.
///
/// Pairs whose first entry is not integral, or which are not coprime (and so
/// are not knots), are dropped.
pub fn iso_group_candidates(lens: &LensSpace, knot: &TorusKnot) -> Vec<TorusKnot> {
    let mut out = Vec::new();
    push_unique(&mut out, Some(knot.clone()));
    push_unique(&mut out, Some(knot.reversed()));
    let cands = candidates(lens, knot);
    let (plus, minus) = q_squared_residue(lens);
    let all = is_null_homologous(lens, knot) || lens.p == Int::from(2);
    let groups: Vec<&[Option<TorusKnot>; 2]> = if all {
        alloc::vec![&cands.b, &cands.c, &cands.d]
    } else if plus {
        alloc::vec![&cands.c]
    } else if minus {
        alloc::vec![&cands.d]
    } else {
        Vec::new()
    };
    for pair in groups {
        for k in pair {
            push_unique(&mut out, k.clone());
        }
    }
    out
}

/// Knots isotopic to `K` in `L(p,q)`, `K` first.
pub fn isotopy_class(lens: &LensSpace, knot: &TorusKnot) -> Vec<TorusKnot> {
    let mut out = alloc::vec![knot.clone()];
    let (a, b) = (&knot.a, &knot.b);
    if lens.p == Int::from(2) {
        let two_a = Int::from(2) * a;
        push_unique(&mut out, Some(knot.reversed()));
        push_unique(&mut out, TorusKnot::new(-a, &two_a + b).ok());
        push_unique(&mut out, TorusKnot::new(a.clone(), -(&two_a + b)).ok());
    } else if lens.q.is_one() || lens.is_q_p_minus_one() {
        let [c, _] = candidates(lens, knot).c;
        push_unique(&mut out, Some(c.expect("C is integral when q = 1 or p - 1")));
    }
    out
}

pub fn are_isotopic(lens: &LensSpace, k1: &TorusKnot, k2: &TorusKnot) -> bool {
    isotopy_class(lens, k1).contains(k2)
}

pub fn diffeotopy_group(lens: &LensSpace) -> DiffeotopyGroup {
    let p = &lens.p;
    let q = &lens.q;
    let (sq_plus, sq_minus) = q_squared_residue(lens);
    let q_pm_one = (q - 1u32).is_multiple_of(p) || (q + 1u32).is_multiple_of(p);
    if *p == Int::from(2) {
        DiffeotopyGroup::Z2SigmaMinus
    } else if q_pm_one {
        DiffeotopyGroup::Z2TauOnly
    } else if sq_plus {
        DiffeotopyGroup::Z2xZ2
    } else if sq_minus {
        DiffeotopyGroup::Z4SigmaMinus
    } else {
        DiffeotopyGroup::Z2Tau
    }
}
