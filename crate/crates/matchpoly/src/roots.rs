//! Real-root counting and exact multiplicities.
//!
//! Everything runs on Sturm chains over the square-free part, with content
//! stripped at every remainder step to keep coefficients integral. Interval
//! endpoints that happen to be roots are deflated out by exact synthetic
//! division before counting, so open-interval counts are always exact.

use num::{BigInt, BigUint, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::RationalPolynomial;
use crate::rational::{display_rational, rat_int, Rational};

/// p with all repeated roots collapsed to simple ones: p / gcd(p, p').
pub fn square_free_part(p: &RationalPolynomial) -> Result<RationalPolynomial> {
    if p.is_zero() {
        return Err(Error::input("square-free part of the zero polynomial"));
    }
    if p.degree() == Some(0) {
        return Ok(RationalPolynomial::one());
    }
    let g = RationalPolynomial::gcd(p, &p.derivative())?;
    p.exact_div(&g)
}

/// Yun square-free decomposition: returns the nonconstant factors `(a_i, i)`
/// with p = lc * prod a_i^i and each a_i monic square-free, ordered by
/// ascending multiplicity.
pub fn yun_decomposition(p: &RationalPolynomial) -> Result<Vec<(RationalPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::input("square-free decomposition of the zero polynomial"));
    }
    let p = p.monic();
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let dp = p.derivative();
    let g = RationalPolynomial::gcd(&p, &dp)?;
    let mut out = Vec::new();
    let mut w = p.exact_div(&g)?;
    let mut z = dp.exact_div(&g)?.sub(&w.derivative());
    let mut i = 1usize;
    while w.degree() != Some(0) {
        let gi = RationalPolynomial::gcd(&w, &z)?;
        if gi.degree().unwrap_or(0) >= 1 {
            out.push((gi.monic(), i));
        }
        w = w.exact_div(&gi)?;
        z = z.exact_div(&gi)?.sub(&w.derivative());
        i += 1;
    }
    Ok(out)
}

enum At<'a> {
    NegInf,
    Point(&'a Rational),
    PosInf,
}

/// Sturm chain of the square-free part of a nonzero polynomial.
pub struct SturmChain {
    chain: Vec<RationalPolynomial>,
}

impl SturmChain {
    pub fn new(p: &RationalPolynomial) -> Result<Self> {
        let sf = square_free_part(p)?;
        let mut chain = vec![sf.primitive_scaled()];
        if chain[0].degree().unwrap_or(0) >= 1 {
            chain.push(chain[0].derivative().primitive_scaled());
            loop {
                let k = chain.len();
                let (_, r) = chain[k - 2].divrem(&chain[k - 1])?;
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg().primitive_scaled());
            }
        }
        Ok(SturmChain { chain })
    }

    fn sign_at(p: &RationalPolynomial, at: &At) -> i8 {
        let v = match at {
            At::Point(x) => p.eval(x),
            At::PosInf => match p.leading() {
                None => Rational::zero(),
                Some(l) => l.clone(),
            },
            At::NegInf => match (p.leading(), p.degree()) {
                (Some(l), Some(d)) => {
                    if d % 2 == 0 {
                        l.clone()
                    } else {
                        -l.clone()
                    }
                }
                _ => Rational::zero(),
            },
        };
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    fn variations(&self, at: At) -> usize {
        let mut count = 0;
        let mut last: Option<i8> = None;
        for p in &self.chain {
            let s = Self::sign_at(p, &at);
            if s == 0 {
                continue;
            }
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations(At::NegInf) - self.variations(At::PosInf)
    }

    /// Distinct real roots in (a, b]; requires that neither endpoint is a
    /// root of the square-free part, which callers arrange by deflation.
    fn count_between(&self, a: At, b: At) -> usize {
        self.variations(a) - self.variations(b)
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.chain[0].eval(x).is_zero()
    }
}

/// Divide out every occurrence of the rational roots in `roots`.
fn deflate_roots(p: &RationalPolynomial, roots: &[&Rational]) -> Result<RationalPolynomial> {
    let mut q = p.clone();
    for r in roots {
        let lin = RationalPolynomial::x_minus(r);
        while !q.is_zero() && q.eval(r).is_zero() {
            q = q.exact_div(&lin)?;
        }
    }
    Ok(q)
}

/// Distinct real roots of a nonzero polynomial.
pub fn count_distinct_roots(p: &RationalPolynomial) -> Result<usize> {
    Ok(SturmChain::new(p)?.count_all())
}

/// Distinct real roots strictly inside (a, b). Endpoints that are roots are
/// excluded (deflated before counting), not an error.
pub fn count_distinct_roots_in(p: &RationalPolynomial, a: &Rational, b: &Rational) -> Result<usize> {
    if a >= b {
        return Err(Error::input(format!(
            "empty interval ({}, {})",
            display_rational(a),
            display_rational(b)
        )));
    }
    let q = deflate_roots(p, &[a, b])?;
    if q.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new(&q)?;
    Ok(chain.count_between(At::Point(a), At::Point(b)))
}

/// Distinct real roots strictly below a.
pub fn count_distinct_roots_below(p: &RationalPolynomial, a: &Rational) -> Result<usize> {
    let q = deflate_roots(p, &[a])?;
    if q.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new(&q)?;
    Ok(chain.count_between(At::NegInf, At::Point(a)))
}

/// Distinct real roots strictly above b.
pub fn count_distinct_roots_above(p: &RationalPolynomial, b: &Rational) -> Result<usize> {
    let q = deflate_roots(p, &[b])?;
    if q.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new(&q)?;
    Ok(chain.count_between(At::Point(b), At::PosInf))
}

/// Open-interval root count plus the interval actually certified. When an
/// endpoint is a root it is first deflated out; the reported endpoint is then
/// pulled inward by halving until the skipped sliver provably contains no
/// root, so the count over the reported interval equals `count`.
pub struct IntervalCount {
    pub count: usize,
    pub interval: (Rational, Rational),
    pub endpoints_adjusted: bool,
}

pub fn sturm_count(p: &RationalPolynomial, a: &Rational, b: &Rational) -> Result<IntervalCount> {
    if p.is_zero() {
        return Err(Error::input("root counting in the zero polynomial"));
    }
    if a >= b {
        return Err(Error::input(format!(
            "empty interval ({}, {})",
            display_rational(a),
            display_rational(b)
        )));
    }
    let q = deflate_roots(p, &[a, b])?;
    let chain = SturmChain::new(&q)?;
    let count = chain.count_between(At::Point(a), At::Point(b));
    let a_was_root = p.eval(a).is_zero();
    let b_was_root = p.eval(b).is_zero();
    if !a_was_root && !b_was_root {
        return Ok(IntervalCount { count, interval: (a.clone(), b.clone()), endpoints_adjusted: false });
    }
    let two = rat_int(2);
    let mut lo = a.clone();
    if a_was_root {
        let mut step = (b - a) / &two;
        loop {
            let cand = a + &step;
            if cand < *b
                && !chain.is_root(&cand)
                && chain.count_between(At::Point(a), At::Point(&cand)) == 0
            {
                lo = cand;
                break;
            }
            step = step / &two;
        }
    }
    let mut hi = b.clone();
    if b_was_root {
        let mut step = (b - a) / &two;
        loop {
            let cand = b - &step;
            if cand > lo
                && !chain.is_root(&cand)
                && chain.count_between(At::Point(&cand), At::Point(b)) == 0
            {
                hi = cand;
                break;
            }
            step = step / &two;
        }
    }
    Ok(IntervalCount { count, interval: (lo, hi), endpoints_adjusted: true })
}

/// Real roots counted with multiplicity. For a polynomial with all roots
/// real this equals the degree.
pub fn real_root_count_with_multiplicity(p: &RationalPolynomial) -> Result<usize> {
    let mut total = 0;
    for (factor, mult) in yun_decomposition(p)? {
        total += mult * count_distinct_roots(&factor)?;
    }
    Ok(total)
}

/// Largest multiplicity among the real roots (0 when there are none).
pub fn max_real_root_multiplicity(p: &RationalPolynomial) -> Result<usize> {
    let mut best = 0;
    for (factor, mult) in yun_decomposition(p)? {
        if count_distinct_roots(&factor)? > 0 {
            best = best.max(mult);
        }
    }
    Ok(best)
}

/// A real algebraic number: a square-free polynomial vanishing on it plus an
/// isolating open interval holding exactly that one root. Square-freeness
/// and isolation are verified on construction; irreducibility is trusted
/// (a reducible square-free polynomial makes multiplicity queries lower
/// bounds rather than exact).
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicNumber {
    min_poly: RationalPolynomial,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicNumber {
    pub fn new(min_poly: RationalPolynomial, lo: Rational, hi: Rational) -> Result<Self> {
        if min_poly.degree().unwrap_or(0) < 1 {
            return Err(Error::input("minimal polynomial must be nonconstant"));
        }
        let g = RationalPolynomial::gcd(&min_poly, &min_poly.derivative())?;
        if g.degree() != Some(0) {
            return Err(Error::input("minimal polynomial is not square-free"));
        }
        if lo >= hi {
            return Err(Error::input(format!(
                "isolating interval ({}, {}) is empty",
                display_rational(&lo),
                display_rational(&hi)
            )));
        }
        for end in [&lo, &hi] {
            if min_poly.eval(end).is_zero() {
                return Err(Error::input(format!(
                    "isolating interval endpoint {} is a root of the minimal polynomial",
                    display_rational(end)
                )));
            }
        }
        let roots = count_distinct_roots_in(&min_poly, &lo, &hi)?;
        if roots != 1 {
            return Err(Error::input(format!(
                "isolating interval ({}, {}) contains {} roots of the minimal polynomial, need exactly 1",
                display_rational(&lo),
                display_rational(&hi),
                roots
            )));
        }
        Ok(AlgebraicNumber { min_poly: min_poly.monic(), lo, hi })
    }

    pub fn min_poly(&self) -> &RationalPolynomial {
        &self.min_poly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }
}

/// A root location at which multiplicities are queried: either an exact
/// rational or an isolated algebraic number.
#[derive(Clone, Debug, PartialEq)]
pub enum ThetaSpec {
    Rational(Rational),
    Algebraic(AlgebraicNumber),
}

impl ThetaSpec {
    pub fn rational(r: Rational) -> Self {
        ThetaSpec::Rational(r)
    }

    pub fn algebraic(min_poly: RationalPolynomial, lo: Rational, hi: Rational) -> Result<Self> {
        Ok(ThetaSpec::Algebraic(AlgebraicNumber::new(min_poly, lo, hi)?))
    }

    pub fn describe(&self) -> String {
        match self {
            ThetaSpec::Rational(r) => display_rational(r),
            ThetaSpec::Algebraic(a) => format!(
                "root of {} in ({}, {})",
                a.min_poly,
                display_rational(&a.lo),
                display_rational(&a.hi)
            ),
        }
    }
}

impl std::fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// Multiplicity of theta as a root of p. Zero when theta is not a root;
/// input error when p is the zero polynomial.
pub fn multiplicity_at(p: &RationalPolynomial, theta: &ThetaSpec) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::input("multiplicity in the zero polynomial is undefined"));
    }
    match theta {
        ThetaSpec::Rational(r) => {
            let lin = RationalPolynomial::x_minus(r);
            let mut q = p.clone();
            let mut m = 0;
            while q.eval(r).is_zero() {
                q = q.exact_div(&lin)?;
                m += 1;
            }
            Ok(m)
        }
        ThetaSpec::Algebraic(a) => {
            let mut q = p.clone();
            let mut m = 0;
            loop {
                let (quot, rem) = q.divrem(a.min_poly())?;
                if !rem.is_zero() {
                    break;
                }
                q = quot;
                m += 1;
                if q.is_zero() {
                    break;
                }
            }
            Ok(m)
        }
    }
}

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;
const MAX_DIVISORS: usize = 100_000;

fn miller_rabin_is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u64);
    if n < &two {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    // Deterministic for n below ~3.3e24; heuristic beyond, which only feeds
    // candidate generation (every candidate root is verified by evaluation).
    'witness: for w in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(w);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All positive divisors of |n|, n nonzero. Trial division plus a primality
/// certificate on the cofactor; gives up (resource error) rather than risk
/// a silently incomplete divisor list.
fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut m = n.abs().to_biguint().expect("abs is nonnegative");
    if m.is_zero() {
        return Err(Error::internal("divisors of zero requested"));
    }
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    let push = |p: BigUint, primes: &mut Vec<(BigUint, u32)>| {
        if let Some(last) = primes.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        primes.push((p, 1));
    };
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigUint::from(d);
        if &bd * &bd > m {
            break;
        }
        while (&m % &bd).is_zero() {
            m /= &bd;
            push(bd.clone(), &mut primes);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let limit_sq = BigUint::from(TRIAL_DIVISION_LIMIT) * BigUint::from(TRIAL_DIVISION_LIMIT);
        if m <= limit_sq || miller_rabin_is_prime(&m) {
            push(m.clone(), &mut primes);
        } else {
            return Err(Error::resource(format!(
                "cannot factor {n} within the trial-division cap while extracting rational roots"
            )));
        }
    }
    let mut divisors = vec![BigUint::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for div in &divisors {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(div * &pk);
                pk *= &p;
            }
        }
        divisors = next;
        if divisors.len() > MAX_DIVISORS {
            return Err(Error::resource(format!(
                "{n} has more than {MAX_DIVISORS} divisors; rational-root search abandoned"
            )));
        }
    }
    Ok(divisors.into_iter().map(BigInt::from).collect())
}

/// All rational roots of a nonzero polynomial with their multiplicities,
/// ascending. Uses the rational-root theorem on the integer-cleared
/// polynomial; exact, with a resource cap on factoring effort.
pub fn rational_roots(p: &RationalPolynomial) -> Result<Vec<(Rational, usize)>> {
    if p.is_zero() {
        return Err(Error::input("rational roots of the zero polynomial"));
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let q = p.primitive_scaled();
    let mut out: Vec<(Rational, usize)> = Vec::new();
    // Root at zero: multiplicity is the low-end gap.
    let zero_mult = q.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        out.push((Rational::zero(), zero_mult));
    }
    let reduced =
        RationalPolynomial::from_coeffs(q.coeffs()[zero_mult..].to_vec());
    if reduced.degree() == Some(0) {
        out.sort_by(|a, b| a.0.cmp(&b.0));
        return Ok(out);
    }
    let a0 = reduced.coeff(0);
    let an = reduced.leading().expect("nonconstant").clone();
    let num_divs = positive_divisors(a0.numer())?;
    let den_divs = positive_divisors(an.numer())?;
    let mut candidates = std::collections::BTreeSet::new();
    for dp in &num_divs {
        for dq in &den_divs {
            let r = Rational::new(dp.clone(), dq.clone());
            candidates.insert(-r.clone());
            candidates.insert(r);
        }
    }
    for cand in candidates {
        if reduced.eval(&cand).is_zero() {
            let m = multiplicity_at(&reduced, &ThetaSpec::rational(cand.clone()))?;
            out.push((cand, m));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// A rational r >= sqrt(s) for nonnegative rational s, tight to within one
/// integer step of the scaled square root.
pub fn sqrt_upper_bound(s: &Rational) -> Result<Rational> {
    if s.is_negative() {
        return Err(Error::input("square root of a negative rational"));
    }
    let pq = s.numer() * s.denom();
    let root = pq.sqrt();
    let root = if &root * &root < pq { root + 1 } else { root };
    Ok(Rational::new(root, s.denom().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(coeffs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn distinct_count_on_the_line() {
        // (x^2 - 2)(x - 1)
        let q = p(&[-2, 0, 1]).mul(&p(&[-1, 1]));
        assert_eq!(count_distinct_roots(&q).unwrap(), 3);
        assert_eq!(count_distinct_roots(&p(&[1, 0, 1])).unwrap(), 0); // x^2 + 1
    }

    #[test]
    fn open_interval_counts_exclude_deflated_endpoints() {
        // x(x-1)(x-4) on (0, 8): endpoints 0 is a root; interior roots 1 and 4.
        let q = p(&[0, 4, -5, 1]);
        assert_eq!(count_distinct_roots_in(&q, &rat_int(0), &rat_int(8)).unwrap(), 2);
        assert_eq!(count_distinct_roots_in(&q, &rat_int(0), &rat_int(4)).unwrap(), 1);
        assert_eq!(count_distinct_roots_below(&q, &rat_int(0)).unwrap(), 0);
        assert_eq!(count_distinct_roots_above(&q, &rat_int(1)).unwrap(), 1);
    }

    #[test]
    fn sturm_count_reports_certified_interval() {
        let q = p(&[0, 4, -5, 1]); // roots 0, 1, 4
        let r = sturm_count(&q, &rat_int(0), &rat_int(8)).unwrap();
        assert_eq!(r.count, 2);
        assert!(r.endpoints_adjusted);
        let (lo, hi) = r.interval;
        assert!(lo > rat_int(0) && hi <= rat_int(8));
        // The certified interval still contains both interior roots.
        assert!(lo < rat_int(1) && hi > rat_int(4));
        let clean = sturm_count(&q, &rat(1, 2), &rat_int(5)).unwrap();
        assert_eq!(clean.count, 2);
        assert!(!clean.endpoints_adjusted);
    }

    #[test]
    fn multiplicity_weighted_count() {
        // (x-1)^2 (x+2)
        let q = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
        assert_eq!(real_root_count_with_multiplicity(&q).unwrap(), 3);
        assert_eq!(max_real_root_multiplicity(&q).unwrap(), 2);
        let yun = yun_decomposition(&q).unwrap();
        assert_eq!(yun, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
    }

    #[test]
    fn rational_root_extraction() {
        // (x-1)(3x-1)(2x+1), scaled by 6
        let q = p(&[-1, 1]).mul(&p(&[-1, 3])).mul(&p(&[1, 2]));
        let roots = rational_roots(&q).unwrap();
        assert_eq!(
            roots,
            vec![(rat(-1, 2), 1), (rat(1, 3), 1), (rat_int(1), 1)]
        );
        assert!(rational_roots(&p(&[-2, 0, 1])).unwrap().is_empty());
        // x^2 (x - 3/2)
        let q = p(&[0, 0, 1]).mul(&RationalPolynomial::x_minus(&rat(3, 2)));
        assert_eq!(rational_roots(&q).unwrap(), vec![(rat_int(0), 2), (rat(3, 2), 1)]);
    }

    #[test]
    fn theta_validation_rejects_bad_specs() {
        assert!(AlgebraicNumber::new(p(&[-1, 0, 1]), rat_int(-2), rat_int(2)).is_err()); // 2 roots
        assert!(AlgebraicNumber::new(p(&[-1, 1]).pow(2), rat_int(0), rat_int(2)).is_err()); // not square-free
        assert!(AlgebraicNumber::new(p(&[-1, 1]), rat_int(1), rat_int(2)).is_err()); // endpoint is root
        assert!(AlgebraicNumber::new(p(&[5]), rat_int(0), rat_int(1)).is_err()); // constant
        let ok = AlgebraicNumber::new(p(&[-2, 0, 1]), rat_int(1), rat_int(2)).unwrap();
        assert_eq!(ok.min_poly(), &p(&[-2, 0, 1]));
    }

    #[test]
    fn multiplicity_at_rational_and_algebraic() {
        // (x^2-2)^2 (x-1)
        let q = p(&[-2, 0, 1]).pow(2).mul(&p(&[-1, 1]));
        let sqrt2 = ThetaSpec::algebraic(p(&[-2, 0, 1]), rat_int(1), rat_int(2)).unwrap();
        assert_eq!(multiplicity_at(&q, &sqrt2).unwrap(), 2);
        assert_eq!(multiplicity_at(&q, &ThetaSpec::rational(rat_int(1))).unwrap(), 1);
        assert_eq!(multiplicity_at(&q, &ThetaSpec::rational(rat_int(7))).unwrap(), 0);
        assert!(multiplicity_at(&RationalPolynomial::zero(), &ThetaSpec::rational(rat_int(0))).is_err());
    }

    #[test]
    fn sqrt_upper_bound_is_an_upper_bound() {
        for (num, den) in [(2i64, 1i64), (8, 1), (7, 3), (0, 1), (25, 4)] {
            let s = rat(num, den);
            let r = sqrt_upper_bound(&s).unwrap();
            assert!(&r * &r >= s);
        }
        assert_eq!(sqrt_upper_bound(&rat(25, 1)).unwrap(), rat_int(5));
    }

    #[test]
    fn miller_rabin_agrees_on_small_numbers() {
        let primes = [2u64, 3, 5, 97, 7919, 1_000_003];
        for q in primes {
            assert!(miller_rabin_is_prime(&BigUint::from(q)), "{q} is prime");
        }
        for c in [1u64, 4, 1_000_005, 7919 * 7919] {
            assert!(!miller_rabin_is_prime(&BigUint::from(c)), "{c} is composite");
        }
    }
}
