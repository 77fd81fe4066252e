//! Legendrian and transverse torus knots in the universally tight contact
//! structures on `L(p,q)`.
//!
//! The maximal rational Thurston–Bennequin invariant and the rotation numbers
//! of the max-tb representatives ("peaks") are computed case by case from the
//! position of the knot slope `b/a` relative to `-p/q`, `-p''/q''` and `-1`.
//! Every other Legendrian representative is a stabilization of a peak, so the
//! peaks determine the whole mountain range.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{Int, Rational};
use crate::error::Error;
use crate::farey::{euclid_decompose, CaseFrame, Decomposition, Slope};
use crate::topology::{are_isotopic, seifert_data, LensSpace, SeifertData, TorusKnot};

/// Upper bound on the number of peak rotation numbers we are willing to list.
pub const MAX_PEAKS: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn apply(self, x: Int) -> Int {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

/// One of the (at most two) universally tight contact structures on `L(p,q)`.
///
/// `Plus` is the structure whose relative Euler class is `(-q,p) - (-1,1)`;
/// `Minus` is its mirror, which negates every rotation number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UtStructure {
    lens: LensSpace,
    sign: Sign,
}

impl UtStructure {
    pub fn new(lens: LensSpace, sign: Sign) -> Result<Self, Error> {
        if sign == Sign::Minus && lens.is_q_p_minus_one() {
            return Err(Error::StructureUnavailable { p: lens.p().clone(), q: lens.q().clone() });
        }
        Ok(UtStructure { lens, sign })
    }

    pub fn lens(&self) -> &LensSpace {
        &self.lens
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlopeCase {
    /// `a, b >= 0`.
    Positive,
    /// `b/a <= -p/q`.
    Steep,
    /// `-1 <= b/a < 0`.
    DivideI,
    /// `-p''/q'' < b/a < -1`.
    DivideII,
    /// `-p/q < b/a <= -p''/q''`.
    DivideIII,
}

impl SlopeCase {
    pub fn label(self) -> &'static str {
        match self {
            SlopeCase::Positive => "Positive",
            SlopeCase::Steep => "Steep",
            SlopeCase::DivideI => "DivideI",
            SlopeCase::DivideII => "DivideII",
            SlopeCase::DivideIII => "DivideIII",
        }
    }

    /// Cases whose max-tb representatives come in two mirrored families.
    pub fn is_two_branch(self) -> bool {
        matches!(self, SlopeCase::DivideI | SlopeCase::DivideIII)
    }
}

impl fmt::Display for SlopeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RotationMode {
    /// Enumerate the `f`-values of the meridian disks directly.
    #[default]
    ProofEnum,
    /// Evaluate the printed `±`/`k` closed forms (branch signs coupled) over
    /// `0 <= k <= N`; kept for auditing against `ProofEnum`.
    ClosedForm,
}

/// Dividing curves of a convex torus: `2 n_pairs` parallel curves of `slope`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DividingSet {
    pub slope: Slope,
    pub n_pairs: Int,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

/// The `f_T` values behind one peak: `r * rot = m f_mu1 + l f_mu2`, with `m`
/// and `l` taken from the knot as given.
///
/// `f_tn_mu1p` is the rotation along the meridian of the complementary solid
/// torus on the intermediate torus `T_n`; present only in the two-branch cases.
/// Single-branch cases report `Plus` under the `Plus` structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationCertificate {
    pub f_mu1: Int,
    pub f_mu2: Int,
    pub f_tn_mu1p: Option<Int>,
    pub branch: Branch,
}

impl RotationCertificate {
    pub fn r_rot(&self, m: &Int, l: &Int) -> Int {
        m * &self.f_mu1 + l * &self.f_mu2
    }

    fn mirrored(self) -> Self {
        RotationCertificate {
            f_mu1: -self.f_mu1,
            f_mu2: -self.f_mu2,
            f_tn_mu1p: self.f_tn_mu1p.map(|f| -f),
            branch: match self.branch {
                Branch::Plus => Branch::Minus,
                Branch::Minus => Branch::Plus,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakRotation {
    pub rot: Rational,
    pub certificate: RotationCertificate,
}

/// Case analysis of a knot: orientation normalisation, Seifert data, slope
/// case and, for the two-branch cases, the decomposition `(n, e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotFrame {
    pub knot: TorusKnot,
    /// The representative the case formulas are evaluated on.
    pub oriented: TorusKnot,
    /// `oriented` is `knot` reversed; rotation numbers are negated on output.
    pub reversed: bool,
    /// Seifert data of `knot` (not `oriented`).
    pub seifert: SeifertData,
    pub case: SlopeCase,
    pub frame: Option<CaseFrame>,
    /// `|a| = |b| n + e` (DivideI) or `|pa+qb| = |p''a+q''b| n + e` (DivideIII).
    pub decomposition: Option<Decomposition>,
    /// `e` hit the divisor, so `n` was shifted down by one.
    pub degenerate_decomposition: bool,
    /// `b/a = -1` exactly.
    pub boundary_minus_one: bool,
}

impl KnotFrame {
    pub fn new(lens: &LensSpace, knot: &TorusKnot) -> Result<KnotFrame, Error> {
        let reversed = !knot.a().is_positive() && !knot.b().is_positive();
        let oriented = if reversed { knot.reversed() } else { knot.clone() };
        let seifert = seifert_data(lens, knot);
        let (a_abs, b_abs) = (oriented.a().abs(), oriented.b().abs());
        let mut out = KnotFrame {
            knot: knot.clone(),
            oriented,
            reversed,
            seifert,
            case: SlopeCase::Positive,
            frame: None,
            decomposition: None,
            degenerate_decomposition: false,
            boundary_minus_one: false,
        };
        if !out.oriented.a().is_negative() && !out.oriented.b().is_negative() {
            return Ok(out);
        }
        // negative slope: a and b are nonzero with opposite signs
        let frame = CaseFrame::new(lens)?;
        let (p, q) = (lens.p(), lens.q());
        out.case = if q * &b_abs >= p * &a_abs {
            SlopeCase::Steep
        } else if b_abs <= a_abs {
            SlopeCase::DivideI
        } else if &frame.q_pp * &b_abs < &frame.p_pp * &a_abs {
            SlopeCase::DivideII
        } else {
            SlopeCase::DivideIII
        };
        match out.case {
            SlopeCase::DivideI => {
                let d = euclid_decompose(&a_abs, &b_abs)?;
                out.degenerate_decomposition = d.is_degenerate(&b_abs);
                out.boundary_minus_one = a_abs == b_abs;
                out.decomposition = Some(d);
            }
            SlopeCase::DivideIII => {
                let dividend = out.oriented.pa_qb(lens).abs();
                let divisor = (&frame.p_pp * out.oriented.a() + &frame.q_pp * out.oriented.b()).abs();
                // divisor = 0 only at b/a = -p''/q'' itself; no decomposition exists
                if let Ok(d) = euclid_decompose(&dividend, &divisor) {
                    out.degenerate_decomposition = d.is_degenerate(&divisor);
                    out.decomposition = Some(d);
                }
            }
            _ => {}
        }
        out.frame = Some(frame);
        Ok(out)
    }

    pub fn order(&self) -> &Int {
        &self.seifert.order
    }

    /// `(m, l)` of the oriented representative.
    fn oriented_ml(&self) -> (Int, Int) {
        let (m, l) = (self.seifert.m.clone(), self.seifert.l.clone());
        if self.reversed { (-m, -l) } else { (m, l) }
    }

    /// Number of admissible `f_{T_n}(μ1')` values: `pn - q` in DivideI, `n` in
    /// DivideIII. `None` outside the two-branch cases.
    pub fn branch_count(&self, lens: &LensSpace) -> Option<Int> {
        match self.case {
            SlopeCase::DivideI => {
                let n = &self.decomposition.as_ref()?.n;
                Some(lens.p() * n - lens.q())
            }
            SlopeCase::DivideIII => {
                Some(self.decomposition.as_ref().map_or_else(Int::zero, |d| d.n.clone()))
            }
            _ => None,
        }
    }
}

/// Rational-valued classical invariants of a Legendrian torus knot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LegendrianClass {
    xi: UtStructure,
    knot: TorusKnot,
    tb: Rational,
    rot: Rational,
}

impl LegendrianClass {
    /// Rejects pairs with `r tb` or `r rot` non-integral.
    pub fn new(xi: UtStructure, knot: TorusKnot, tb: Rational, rot: Rational) -> Result<Self, Error> {
        let r = crate::topology::order(xi.lens(), &knot);
        if tb.scaled_integer(&r).is_none() || rot.scaled_integer(&r).is_none() {
            return Err(Error::OffLattice);
        }
        Ok(LegendrianClass { xi, knot, tb, rot })
    }

    pub fn structure(&self) -> &UtStructure {
        &self.xi
    }

    pub fn knot(&self) -> &TorusKnot {
        &self.knot
    }

    pub fn tb(&self) -> &Rational {
        &self.tb
    }

    pub fn rot(&self) -> &Rational {
        &self.rot
    }
}

/// Peaks of the mountain range of one knot type in one structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MountainRange {
    pub frame: KnotFrame,
    pub sign: Sign,
    pub mode: RotationMode,
    pub max_tb: Rational,
    /// Sorted by rotation number, no duplicates.
    pub peaks: Vec<PeakRotation>,
}

impl MountainRange {
    pub fn case(&self) -> SlopeCase {
        self.frame.case
    }

    pub fn peak_pairs(&self) -> Vec<(Rational, Rational)> {
        self.peaks.iter().map(|pk| (self.max_tb.clone(), pk.rot.clone())).collect()
    }

    pub fn peak_rots(&self) -> Vec<Rational> {
        self.peaks.iter().map(|pk| pk.rot.clone()).collect()
    }

    /// Whether `(tb, rot)` is a peak or a stabilization of one.
    pub fn is_realizable(&self, tb: &Rational, rot: &Rational) -> bool {
        let r = self.frame.order();
        if tb.scaled_integer(r).is_none() || rot.scaled_integer(r).is_none() {
            return false;
        }
        let Some(s) = self.max_tb.integer_difference(tb) else { return false };
        if s.is_negative() {
            return false;
        }
        // only peaks in [rot - s, rot + s] can reach (tb, rot)
        let low = rot.add_int(&-&s);
        let start = self.peaks.partition_point(|pk| pk.rot < low);
        let high = rot.add_int(&s);
        self.peaks[start..].iter().take_while(|pk| pk.rot <= high).any(|pk| match rot.integer_difference(&pk.rot) {
            Some(d) => (&d + &s).is_even(),
            None => false,
        })
    }

    /// All realizable `(tb, rot)` with `tb >= max_tb - depth`, ordered by
    /// decreasing `tb` and then increasing `rot`.
    pub fn lattice(&self, depth: u32) -> Vec<(Rational, Rational)> {
        // work with r*rot so that sorting compares integers
        let r = self.frame.order();
        let peaks: Vec<Int> = self.peaks.iter().map(|pk| pk.rot.scaled_integer(r).expect("peaks lie on the lattice")).collect();
        let mut out = Vec::new();
        let mut row: Vec<Int> = Vec::new();
        for s in 0..=i64::from(depth) {
            let tb = self.max_tb.add_int(&Int::from(-s));
            row.clear();
            for x in &peaks {
                for i in 0..=s {
                    row.push(x + r * Int::from(2 * i - s));
                }
            }
            row.sort();
            row.dedup();
            out.extend(row.iter().map(|x| (tb.clone(), Rational::new(x.clone(), r.clone()).expect("order >= 1"))));
        }
        out
    }

    pub fn transverse(&self) -> TransverseInvariants {
        let r = self.frame.order();
        let top = self.max_tb.scaled_integer(r).expect("max tb lies on the lattice");
        let mut scaled: Vec<Int> = self.peaks.iter().map(|pk| &top - pk.rot.scaled_integer(r).expect("peaks lie on the lattice")).collect();
        scaled.sort();
        scaled.dedup();
        let generators: Vec<Rational> = scaled.into_iter().map(|x| Rational::new(x, r.clone()).expect("order >= 1")).collect();
        let sl_max = generators.last().expect("peaks are nonempty").clone();
        TransverseInvariants { sl_max, generators }
    }
}

/// Rational self-linking numbers of the transverse push-offs. The realizable
/// values are `g - 2j` for `g` in `generators` and `j >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransverseInvariants {
    pub sl_max: Rational,
    pub generators: Vec<Rational>,
}

impl TransverseInvariants {
    pub fn is_realizable(&self, sl: &Rational) -> bool {
        self.generators.iter().any(|g| match g.integer_difference(sl) {
            Some(d) => !d.is_negative() && d.is_even(),
            None => false,
        })
    }
}

pub fn slope_case(lens: &LensSpace, knot: &TorusKnot) -> Result<SlopeCase, Error> {
    KnotFrame::new(lens, knot).map(|f| f.case)
}

/// `tb_Q` of a Legendrian ruling curve or divide in the class of `knot` on a
/// convex torus with dividing set `ds`: `(1/r) l b - n |a t + b s|` for
/// dividing slope `-t/s`.
pub fn tb_from_dividing_set(xi: &UtStructure, knot: &TorusKnot, ds: &DividingSet) -> Rational {
    let sd = seifert_data(xi.lens(), knot);
    let (num, den) = ds.slope.as_pair();
    let crossings = (knot.a() * num - knot.b() * den).abs();
    seifert_framing(&sd, knot) - Rational::from_int(&ds.n_pairs * crossings)
}

/// `(1/r) l b`, the rational Seifert framing.
fn seifert_framing(sd: &SeifertData, knot: &TorusKnot) -> Rational {
    Rational::new(&sd.l * knot.b(), sd.order.clone()).expect("order >= 1")
}

fn max_tb_of(lens: &LensSpace, frame: &KnotFrame) -> Result<Rational, Error> {
    let k = &frame.oriented;
    let base = seifert_framing(&frame.seifert, &frame.knot);
    Ok(match frame.case {
        SlopeCase::Positive => base - Rational::from_int(k.a() + k.b()),
        SlopeCase::Steep => {
            let c = &frame.frame.as_ref().expect("negative slopes carry a frame").c;
            let _ = lens;
            base - Rational::from_int((k.a() * c + k.b()).abs())
        }
        SlopeCase::DivideI | SlopeCase::DivideII | SlopeCase::DivideIII => base,
    })
}

pub fn max_tb(xi: &UtStructure, knot: &TorusKnot) -> Result<Rational, Error> {
    let frame = KnotFrame::new(xi.lens(), knot)?;
    max_tb_of(xi.lens(), &frame)
}

fn single(f_mu1: Int, f_mu2: Int) -> Vec<RotationCertificate> {
    alloc::vec![RotationCertificate { f_mu1, f_mu2, f_tn_mu1p: None, branch: Branch::Plus }]
}

fn checked_count(case: SlopeCase, frame: &KnotFrame, count: &Int, min: i64) -> Result<u64, Error> {
    if *count < Int::from(min) {
        let n = frame.decomposition.as_ref().map_or_else(Int::zero, |d| d.n.clone());
        return Err(Error::EmptyRotationRange { case, n, count: count.clone() });
    }
    match count.to_u64() {
        Some(c) if c <= MAX_PEAKS => Ok(c),
        _ => Err(Error::TooManyPeaks(count.clone())),
    }
}

/// Certificates for the `Plus` structure and the oriented representative.
fn certificates(
    lens: &LensSpace,
    frame: &KnotFrame,
    mode: RotationMode,
) -> Result<Vec<RotationCertificate>, Error> {
    let (p, q) = (lens.p(), lens.q());
    let k = &frame.oriented;
    let b_abs = k.b().abs();
    let pq_abs = k.pa_qb(lens).abs();
    let one = Int::one();
    match frame.case {
        SlopeCase::Positive => Ok(single(p - q - 1, Int::zero())),
        SlopeCase::Steep => {
            let c = &frame.frame.as_ref().expect("frame").c;
            Ok(single(p - c * q - 1, c - 1))
        }
        SlopeCase::DivideII => Ok(single(&pq_abs - 1, &b_abs - 1)),
        SlopeCase::DivideI | SlopeCase::DivideIII => {
            let count = frame.branch_count(lens).expect("two-branch case");
            let mut out = Vec::new();
            match mode {
                RotationMode::ProofEnum => {
                    let n = checked_count(frame.case, frame, &count, 1)?;
                    for j in 0..n {
                        // f_{T_n}(μ1') runs over count-1, count-3, ..., 1-count
                        let f = &count - 1u32 - Int::from(2 * j);
                        out.push(RotationCertificate {
                            f_mu1: &f + &count - &pq_abs,
                            f_mu2: &one - &b_abs,
                            f_tn_mu1p: Some(f.clone()),
                            branch: Branch::Minus,
                        });
                        out.push(RotationCertificate {
                            f_mu1: &f + &pq_abs - &count,
                            f_mu2: &b_abs - &one,
                            f_tn_mu1p: Some(f),
                            branch: Branch::Plus,
                        });
                    }
                }
                RotationMode::ClosedForm => {
                    let n = checked_count(frame.case, frame, &count, 0)?;
                    for kk in 0..=n {
                        let two_k = Int::from(2 * kk);
                        for (sign, branch) in [(Sign::Plus, Branch::Plus), (Sign::Minus, Branch::Minus)] {
                            out.push(RotationCertificate {
                                f_mu1: sign.apply(&pq_abs + 1 - &two_k),
                                f_mu2: sign.apply(&b_abs - 1),
                                f_tn_mu1p: Some(sign.apply(&count + 1 - &two_k)),
                                branch,
                            });
                        }
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Rotation numbers of the max-tb representatives, sorted and deduplicated.
pub fn peak_rotations(
    xi: &UtStructure,
    knot: &TorusKnot,
    mode: RotationMode,
) -> Result<Vec<PeakRotation>, Error> {
    let frame = KnotFrame::new(xi.lens(), knot)?;
    peaks_of(xi, &frame, mode)
}

fn peaks_of(xi: &UtStructure, frame: &KnotFrame, mode: RotationMode) -> Result<Vec<PeakRotation>, Error> {
    let (m, l) = frame.oriented_ml();
    let r = frame.order();
    let mut peaks: Vec<PeakRotation> = certificates(xi.lens(), frame, mode)?
        .into_iter()
        .map(|cert| {
            let cert = if xi.sign() == Sign::Minus { cert.mirrored() } else { cert };
            let mut rot = Rational::new(cert.r_rot(&m, &l), r.clone()).expect("order >= 1");
            if frame.reversed {
                rot = -rot;
            }
            PeakRotation { rot, certificate: cert }
        })
        .collect();
    peaks.sort_by(|x, y| x.rot.cmp(&y.rot));
    peaks.dedup_by(|x, y| x.rot == y.rot);
    Ok(peaks)
}

pub fn mountain_range(xi: &UtStructure, knot: &TorusKnot, mode: RotationMode) -> Result<MountainRange, Error> {
    let frame = KnotFrame::new(xi.lens(), knot)?;
    let max_tb = max_tb_of(xi.lens(), &frame)?;
    let peaks = peaks_of(xi, &frame, mode)?;
    Ok(MountainRange { frame, sign: xi.sign(), mode, max_tb, peaks })
}

/// `S±`: `tb - 1`, `rot ± 1`.
pub fn stabilize(class: &LegendrianClass, sign: Sign) -> LegendrianClass {
    let step = match sign {
        Sign::Plus => Int::one(),
        Sign::Minus => -Int::one(),
    };
    LegendrianClass {
        xi: class.xi.clone(),
        knot: class.knot.clone(),
        tb: class.tb.add_int(&-Int::one()),
        rot: class.rot.add_int(&step),
    }
}

pub fn is_realizable(xi: &UtStructure, knot: &TorusKnot, tb: &Rational, rot: &Rational) -> Result<bool, Error> {
    Ok(mountain_range(xi, knot, RotationMode::ProofEnum)?.is_realizable(tb, rot))
}

/// Same structure, isotopic knots, equal `tb` and `rot`.
pub fn are_contactomorphic(c1: &LegendrianClass, c2: &LegendrianClass) -> bool {
    c1.xi == c2.xi && c1.tb == c2.tb && c1.rot == c2.rot && are_isotopic(c1.xi.lens(), &c1.knot, &c2.knot)
}

/// Numbers of negative and positive stabilizations applied to each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationCounts {
    pub s1_minus: Int,
    pub s1_plus: Int,
    pub s2_minus: Int,
    pub s2_plus: Int,
}

/// Fewest stabilizations after which both classes carry equal `(tb, rot)`.
///
/// Ties (same total) are broken by the smallest `s1_minus`. Returns `None` for
/// different structures or knot types, or when the parity of `tb1 - tb2`
/// and `rot1 - rot2` differs.
pub fn common_stabilization(c1: &LegendrianClass, c2: &LegendrianClass) -> Option<StabilizationCounts> {
    if c1.xi != c2.xi || !are_isotopic(c1.xi.lens(), &c1.knot, &c2.knot) {
        return None;
    }
    // s1 = s2 + d; net rotation shifts x1 - x2 = -delta
    let d = c1.tb.integer_difference(&c2.tb)?;
    let delta = c1.rot.integer_difference(&c2.rot)?;
    if !(&d + &delta).is_even() {
        return None;
    }
    let zero = Int::zero();
    let need = (delta.abs() - &d).div_ceil(&Int::from(2));
    let s2 = zero.clone().max(-&d).max(need);
    let s1 = &s2 + &d;
    // x1 = net (plus - minus) on c1, as large as possible; x2 = x1 + delta
    let x1 = s1.clone().min(&s2 - &delta);
    let x2 = &x1 + &delta;
    let two = Int::from(2);
    Some(StabilizationCounts {
        s1_minus: (&s1 - &x1) / &two,
        s1_plus: (&s1 + &x1) / &two,
        s2_minus: (&s2 - &x2) / &two,
        s2_plus: (&s2 + &x2) / &two,
    })
}

pub fn transverse_invariants(
    xi: &UtStructure,
    knot: &TorusKnot,
    mode: RotationMode,
) -> Result<TransverseInvariants, Error> {
    Ok(mountain_range(xi, knot, mode)?.transverse())
}
