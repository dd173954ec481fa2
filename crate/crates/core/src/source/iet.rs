use super::Generator;
use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Coding of an orbit of an interval exchange on `[0,1)`.
///
/// `permutation[j-1] = π(j)` gives the position of `T(I_j)` among the images;
/// when absent the symmetric permutation is used.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IetSpec {
    pub alphas: Vec<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    #[serde(default = "zero", skip_serializing_if = "is_zero")]
    pub start: Number,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub letters: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<IetMode>,
    /// Guard band for real mode; defaults to `1e-12 * k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guard: Option<f64>,
}

fn zero() -> Number {
    Number::Text("0".into())
}

fn is_zero(n: &Number) -> bool {
    *n == zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IetMode {
    /// Exact arithmetic in Q.
    Rational,
    /// Exact arithmetic in Q(√d) for one square-free d.
    Quadratic,
    /// 96-bit fixed point with a guard band around endpoints.
    Real,
}

/// `"p/q"`, an integer, a decimal literal, or `(p + q√d)/r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Text(String),
    Surd { p: i64, q: i64, d: u64, r: i64 },
}

impl From<&str> for Number {
    fn from(s: &str) -> Self {
        Number::Text(s.into())
    }
}

type Q = Ratio<i128>;

#[derive(Clone, Debug)]
enum Value {
    /// `a + b√d`; `d == 0` whenever `b == 0`.
    Quad { a: Q, b: Q, d: u64 },
    Decimal(String),
}

fn parse_number(field: &str, n: &Number) -> Result<Value> {
    let bad = |m: String| Error::spec(field, m);
    match n {
        Number::Surd { p, q, d, r } => {
            if *r == 0 {
                return Err(bad("zero denominator".into()));
            }
            let r = *r as i128;
            let root = (*d as f64).sqrt().round() as u64;
            if *q == 0 || *d == 0 || root * root == *d {
                let v = Q::new(*p as i128 + *q as i128 * root as i128, r);
                return Ok(Value::Quad { a: v, b: Q::zero(), d: 0 });
            }
            Ok(Value::Quad {
                a: Q::new(*p as i128, r),
                b: Q::new(*q as i128, r),
                d: *d,
            })
        }
        Number::Text(s) if s.contains('√') || s.contains("sqrt") => {
            let n = parse_surd(s).ok_or_else(|| bad(format!("cannot read {s:?}")))?;
            parse_number(field, &n)
        }
        Number::Text(s) => {
            let s = s.trim();
            if s.contains(['.', 'e', 'E']) {
                let ok = s
                    .trim_start_matches(['-', '+'])
                    .split_once('.')
                    .map(|(i, f)| i.chars().chain(f.chars()).all(|c| c.is_ascii_digit()))
                    .unwrap_or(false);
                if !ok {
                    return Err(bad(format!("unsupported decimal literal {s:?}")));
                }
                return Ok(Value::Decimal(s.into()));
            }
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s, "1"),
            };
            let num: i128 = num.parse().map_err(|_| bad(format!("cannot read {s:?}")))?;
            let den: i128 = den.parse().map_err(|_| bad(format!("cannot read {s:?}")))?;
            if den == 0 {
                return Err(bad("zero denominator".into()));
            }
            Ok(Value::Quad {
                a: Q::new(num, den),
                b: Q::zero(),
                d: 0,
            })
        }
    }
}

/// Reads `p + q√d`, optionally as `(p + q√d)/r`; `sqrt(d)` may stand for `√d`.
fn parse_surd(s: &str) -> Option<Number> {
    let t: String = s.replace("sqrt", "√").chars().filter(|c| !c.is_whitespace()).collect();
    let (body, r) = match t.rsplit_once('/') {
        Some((b, r)) if b.starts_with('(') && b.ends_with(')') => (&b[1..b.len() - 1], r.parse().ok()?),
        Some(_) => return None,
        None => (t.as_str(), 1),
    };
    let (mut p, mut q, mut d) = (0i64, 0i64, None);
    let mut start = 0;
    let bytes = body.as_bytes();
    for i in 1..=bytes.len() {
        if i < bytes.len() && !matches!(bytes[i], b'+' | b'-') {
            continue;
        }
        let term = &body[start..i];
        start = i;
        match term.split_once('√') {
            Some((coef, rad)) => {
                let coef = coef.trim_end_matches('*');
                let c = match coef {
                    "" | "+" => 1,
                    "-" => -1,
                    _ => coef.parse().ok()?,
                };
                let rad: u64 = rad.trim_start_matches('(').trim_end_matches(')').parse().ok()?;
                if d.is_some_and(|d| d != rad) {
                    return None;
                }
                d = Some(rad);
                q += c;
            }
            None => p += term.parse::<i64>().ok()?,
        }
    }
    Some(Number::Surd { p, q, d: d?, r })
}

const FRAC_BITS: u32 = 96;

fn big_ratio_to_fixed(num: BigInt, den: BigInt) -> BigInt {
    let (q, _) = (num << FRAC_BITS).div_rem(&den);
    q
}

fn value_to_fixed(v: &Value) -> Result<i128> {
    let big = match v {
        Value::Quad { a, b, d } => {
            let mut acc = big_ratio_to_fixed(BigInt::from(*a.numer()), BigInt::from(*a.denom()));
            if !b.is_zero() {
                let root = (BigInt::from(*d) << (2 * FRAC_BITS)).sqrt();
                let scaled = root * BigInt::from(*b.numer());
                let (q, _) = scaled.div_rem(&BigInt::from(*b.denom()));
                acc += q;
            }
            acc
        }
        Value::Decimal(s) => {
            let neg = s.starts_with('-');
            let body = s.trim_start_matches(['-', '+']);
            let (int, frac) = body.split_once('.').unwrap_or((body, ""));
            let digits: BigInt = format!("{int}{frac}").parse().unwrap_or_default();
            let den = num_traits::pow(BigInt::from(10), frac.len());
            let v = big_ratio_to_fixed(digits, den);
            if neg {
                -v
            } else {
                v
            }
        }
    };
    big.to_i128()
        .ok_or_else(|| Error::InvalidIet("value out of range".into()))
}

/// Arithmetic used to run an orbit.
trait Field: Send + 'static {
    type V: Copy + Send;
    fn add(&self, a: Self::V, b: Self::V) -> Self::V;
    fn sub(&self, a: Self::V, b: Self::V) -> Self::V;
    fn sign(&self, v: Self::V) -> Ordering;
    /// Whether `v` is too close to zero to decide its sign.
    fn ambiguous(&self, _v: Self::V) -> bool {
        false
    }
}

/// `(A + B√d)/D` with a fixed common denominator.
struct Exact {
    d: u64,
}

impl Field for Exact {
    type V = (i128, i128);

    fn add(&self, a: Self::V, b: Self::V) -> Self::V {
        (a.0 + b.0, a.1 + b.1)
    }

    fn sub(&self, a: Self::V, b: Self::V) -> Self::V {
        (a.0 - b.0, a.1 - b.1)
    }

    fn sign(&self, (a, b): Self::V) -> Ordering {
        if b == 0 || self.d == 0 {
            return a.cmp(&0);
        }
        if a == 0 || (a > 0) == (b > 0) {
            return if a == 0 { b.cmp(&0) } else { a.cmp(&0) };
        }
        let lhs = a.checked_mul(a);
        let rhs = b.checked_mul(b).and_then(|bb| bb.checked_mul(self.d as i128));
        let ord = match (lhs, rhs) {
            (Some(l), Some(r)) => l.cmp(&r),
            _ => {
                let (a, b) = (BigInt::from(a), BigInt::from(b));
                (&a * &a).cmp(&(&b * &b * BigInt::from(self.d)))
            }
        };
        if a > 0 {
            ord
        } else {
            ord.reverse()
        }
    }
}

struct Fixed {
    guard: i128,
}

impl Field for Fixed {
    type V = i128;

    fn add(&self, a: i128, b: i128) -> i128 {
        a + b
    }

    fn sub(&self, a: i128, b: i128) -> i128 {
        a - b
    }

    fn sign(&self, v: i128) -> Ordering {
        v.cmp(&0)
    }

    fn ambiguous(&self, v: i128) -> bool {
        v.abs() < self.guard
    }
}

/// Interval data shared by forward and backward orbits.
struct Exchange<F: Field> {
    field: F,
    /// `β_j`, left endpoints of `I_j`.
    starts: Vec<F::V>,
    /// `c_j`.
    shifts: Vec<F::V>,
    /// Left endpoints of `T(I_j)` in increasing order, with their `j`.
    image_starts: Vec<(F::V, usize)>,
    guard: f64,
}

impl<F: Field> Exchange<F> {
    fn locate(&self, x: F::V, starts: &[F::V], step: usize) -> Result<usize> {
        let mut j = 0;
        for (i, &s) in starts.iter().enumerate().skip(1) {
            let diff = self.field.sub(x, s);
            if self.field.ambiguous(diff) {
                return Err(Error::BoundaryAmbiguity {
                    step,
                    guard: self.guard,
                });
            }
            if self.field.sign(diff) != Ordering::Less {
                j = i;
            }
        }
        Ok(j)
    }
}

struct Orbit<F: Field> {
    ex: Exchange<F>,
    x: F::V,
    backward: bool,
    alphabet: Alphabet,
    buf: Vec<Symbol>,
}

impl<F: Field> Generator for Orbit<F> {
    fn extend_to(&mut self, len: usize) -> Result<()> {
        let img: Vec<F::V> = self.ex.image_starts.iter().map(|p| p.0).collect();
        while self.buf.len() < len {
            let step = self.buf.len();
            if self.backward {
                let slot = self.ex.locate(self.x, &img, step)?;
                let j = self.ex.image_starts[slot].1;
                self.x = self.ex.field.sub(self.x, self.ex.shifts[j]);
                self.buf.push(j as Symbol);
            } else {
                let j = self.ex.locate(self.x, &self.ex.starts, step)?;
                self.buf.push(j as Symbol);
                self.x = self.ex.field.add(self.x, self.ex.shifts[j]);
            }
        }
        Ok(())
    }

    fn symbols(&self) -> &[Symbol] {
        &self.buf
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}

impl IetSpec {
    pub fn new(alphas: &[&str], permutation: Option<Vec<usize>>, start: &str) -> Self {
        IetSpec {
            alphas: alphas.iter().map(|&a| a.into()).collect(),
            permutation,
            start: start.into(),
            letters: None,
            mode: None,
            guard: None,
        }
    }

    pub fn k(&self) -> usize {
        self.alphas.len()
    }

    fn permutation(&self) -> Result<Vec<usize>> {
        let k = self.k();
        let pi = match &self.permutation {
            Some(p) => p.clone(),
            None => (1..=k).rev().collect(),
        };
        if pi.len() != k {
            return Err(Error::InvalidIet(format!(
                "permutation has {} entries for {k} intervals",
                pi.len()
            )));
        }
        let mut seen = vec![false; k];
        for &p in &pi {
            if p == 0 || p > k || seen[p - 1] {
                return Err(Error::InvalidIet(format!("{pi:?} is not a permutation of 1..={k}")));
            }
            seen[p - 1] = true;
        }
        Ok(pi)
    }

    fn alphabet(&self) -> Result<Alphabet> {
        match &self.letters {
            Some(l) => {
                let a = Alphabet::new(l.chars())?;
                if a.len() != self.k() {
                    return Err(Error::spec("letters", format!("need {} letters", self.k())));
                }
                Ok(a)
            }
            None => Alphabet::new((0..self.k() as u8).map(|i| (b'a' + i) as char)),
        }
    }

    /// Arithmetic mode implied by the inputs unless overridden.
    pub fn effective_mode(&self) -> Result<IetMode> {
        let vals = self.values()?;
        let inferred = if vals.iter().any(|v| matches!(v, Value::Decimal(_))) {
            IetMode::Real
        } else if vals.iter().any(|v| matches!(v, Value::Quad { d, .. } if *d != 0)) {
            IetMode::Quadratic
        } else {
            IetMode::Rational
        };
        Ok(match (self.mode, inferred) {
            (None, m) => m,
            (Some(IetMode::Real), _) => IetMode::Real,
            (Some(_), IetMode::Real) => {
                return Err(Error::spec("mode", "decimal literals need real mode"))
            }
            (Some(IetMode::Rational), IetMode::Quadratic) => {
                return Err(Error::spec("mode", "square roots need quadratic or real mode"))
            }
            (Some(_), m) => m,
        })
    }

    fn values(&self) -> Result<Vec<Value>> {
        let mut out = Vec::with_capacity(self.k() + 1);
        for a in &self.alphas {
            out.push(parse_number("alphas", a)?);
        }
        out.push(parse_number("start", &self.start)?);
        Ok(out)
    }

    pub(crate) fn generator(&self) -> Result<Box<dyn Generator>> {
        self.orbit(false)
    }

    /// Codes `T^-1(x), T^-2(x), ...`.
    pub fn backward_generator(&self) -> Result<Box<dyn Generator>> {
        self.orbit(true)
    }

    /// Letters of `T^n(x)` for `n` in `-depth..depth`, in order.
    pub fn two_sided(&self, depth: usize) -> Result<Vec<Symbol>> {
        let mut back = self.backward_generator()?;
        back.extend_to(depth)?;
        let mut fwd = self.generator()?;
        fwd.extend_to(depth)?;
        let mut out: Vec<Symbol> = back.symbols()[..depth].iter().rev().copied().collect();
        out.extend_from_slice(&fwd.symbols()[..depth]);
        Ok(out)
    }

    fn orbit(&self, backward: bool) -> Result<Box<dyn Generator>> {
        let k = self.k();
        if k == 0 {
            return Err(Error::InvalidIet("no intervals".into()));
        }
        let pi = self.permutation()?;
        let alphabet = self.alphabet()?;
        let vals = self.values()?;
        let guard = self.guard.unwrap_or(1e-12 * k as f64);
        match self.effective_mode()? {
            IetMode::Real => {
                let fixed = vals.iter().map(value_to_fixed).collect::<Result<Vec<_>>>()?;
                let g = (guard * 2f64.powi(FRAC_BITS as i32)) as i128;
                build(Fixed { guard: g }, fixed, 1i128 << FRAC_BITS, &pi, guard, alphabet, backward)
            }
            _ => {
                let mut d = 0;
                let mut den = 1i128;
                for v in &vals {
                    if let Value::Quad { a, b, d: vd } = v {
                        if *vd != 0 {
                            if d != 0 && d != *vd {
                                return Err(Error::InvalidIet(
                                    "exact mode needs a single square root; use real mode".into(),
                                ));
                            }
                            d = *vd;
                        }
                        den = den.lcm(a.denom()).lcm(b.denom());
                    }
                }
                let scaled = vals
                    .iter()
                    .map(|v| match v {
                        Value::Quad { a, b, .. } => {
                            let sa = *a * Q::from_integer(den);
                            let sb = *b * Q::from_integer(den);
                            (sa.to_integer(), sb.to_integer())
                        }
                        Value::Decimal(_) => unreachable!("exact mode excludes decimals"),
                    })
                    .collect::<Vec<_>>();
                build(Exact { d }, scaled, (den, 0), &pi, guard, alphabet, backward)
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn build<F: Field>(
    field: F,
    vals: Vec<F::V>,
    one: F::V,
    pi: &[usize],
    guard: f64,
    alphabet: Alphabet,
    backward: bool,
) -> Result<Box<dyn Generator>>
where
    F::V: PartialEq,
{
    let k = pi.len();
    let (alphas, start) = (&vals[..k], vals[k]);
    let zero = field.sub(one, one);
    for (i, &a) in alphas.iter().enumerate() {
        if field.sign(a) != Ordering::Greater {
            return Err(Error::InvalidIet(format!("alpha_{} is not positive", i + 1)));
        }
    }
    let total = alphas.iter().fold(zero, |s, &a| field.add(s, a));
    let excess = field.sub(total, one);
    if field.sign(excess) != Ordering::Equal && !field.ambiguous(excess) {
        return Err(Error::InvalidIet("lengths do not sum to 1".into()));
    }
    if field.sign(start) == Ordering::Less || field.sign(field.sub(start, total)) != Ordering::Less {
        return Err(Error::InvalidIet("start must lie in [0,1)".into()));
    }
    let mut starts = Vec::with_capacity(k);
    let mut acc = zero;
    for &a in alphas {
        starts.push(acc);
        acc = field.add(acc, a);
    }
    let shifts: Vec<F::V> = (0..k)
        .map(|j| {
            let before = (0..k)
                .filter(|&i| pi[i] < pi[j])
                .fold(zero, |s, i| field.add(s, alphas[i]));
            field.sub(before, starts[j])
        })
        .collect();
    let mut image_starts: Vec<(F::V, usize)> = (0..k).map(|j| (field.add(starts[j], shifts[j]), j)).collect();
    image_starts.sort_by_key(|&(_, j)| pi[j]);
    let ex = Exchange {
        field,
        starts,
        shifts,
        image_starts,
        guard,
    };
    Ok(Box::new(Orbit {
        ex,
        x: start,
        backward,
        alphabet,
        buf: Vec::new(),
    }))
}
