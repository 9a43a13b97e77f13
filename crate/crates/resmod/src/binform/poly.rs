//! Dense univariate polynomial arithmetic and exact factorization over Q.
//!
//! Factoring a binary form reduces to factoring its affine part, a univariate
//! polynomial of degree at most 12. The pipeline is the classical one: make
//! the input primitive over Z, split off repeated factors with Yun's
//! algorithm, factor each squarefree part modulo a small prime with
//! Berlekamp's algorithm, lift the modular factors above the Landau-Mignotte
//! coefficient bound by quadratic Hensel steps, and recombine subsets of
//! lifted factors into true integer factors. Degrees never exceed 12, so the
//! subset search tries at most 2^12 candidates and nothing here needs to be
//! clever about performance.

use crate::rational::Q;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial over Q, dense ascending coefficients.
///
/// The zero polynomial is the empty coefficient vector; `degree()` returns 0
/// for it, so callers check `is_zero` first where the distinction matters.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct QPoly {
    coeffs: Vec<Q>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Q>) -> QPoly {
        while coeffs.last().is_some_and(Q::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> QPoly {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> QPoly {
        QPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, c: &Q) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&self.lc().recip())
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Q::int(i as i64) * c)
                .collect(),
        )
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.degree() < d.degree() || self.is_zero() {
            return (QPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lc_inv = d.lc().recip();
        let mut quo = vec![Q::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lc_inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k - dd + i] -= &t;
                }
            }
            quo[k - dd] = c;
        }
        (QPoly::new(quo), QPoly::new(rem))
    }

    /// Exact quotient, `None` when the division leaves a remainder.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Largest e with `d^e` dividing self (`d` nonconstant, self nonzero).
    pub fn multiplicity_of_factor(&self, d: &QPoly) -> u32 {
        let mut e = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(d) {
            e += 1;
            cur = q;
        }
        e
    }

    /// Squarefree decomposition of a nonconstant monic polynomial by Yun's
    /// algorithm: returns monic `parts` with `self = prod part_i ^ mult_i`,
    /// the parts pairwise coprime and squarefree.
    fn squarefree_decomposition(&self) -> Vec<(QPoly, u32)> {
        let g = self.gcd(&self.derivative());
        let mut c = self.div_exact(&g).expect("gcd divides");
        let mut d = self
            .derivative()
            .div_exact(&g)
            .expect("gcd divides derivative")
            .sub(&c.derivative());
        let mut out = Vec::new();
        let mut i = 1u32;
        while !c.is_constant() {
            let a = if d.is_zero() { c.clone() } else { c.gcd(&d) };
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            c = c.div_exact(&a).expect("squarefree part divides");
            d = d.div_exact(&a).expect("squarefree part divides").sub(&c.derivative());
            i += 1;
        }
        out
    }

    /// Clears denominators and the content: returns `(c, z)` with
    /// `self = c * z`, `z` a primitive integer polynomial with positive
    /// leading coefficient.
    pub fn content_primitive(&self) -> (Q, ZPoly) {
        assert!(!self.is_zero());
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().expect("nonzero").is_negative() {
            content = -content;
        }
        let z = ZPoly::new(ints.iter().map(|c| c / &content).collect());
        (Q::from_big(content, den), z)
    }

    /// Complete factorization over Q: `(unit, factors)` with the factors
    /// monic irreducible, sorted by degree then coefficients, and
    /// `self = unit * prod factor_i ^ mult_i`.
    pub fn factor(&self) -> (Q, Vec<(QPoly, u32)>) {
        assert!(!self.is_zero(), "factor of zero polynomial");
        let unit = self.lc();
        if self.is_constant() {
            return (unit, Vec::new());
        }
        let mut out: Vec<(QPoly, u32)> = Vec::new();
        for (part, mult) in self.monic().squarefree_decomposition() {
            let (_, z) = part.content_primitive();
            for zf in factor_squarefree_primitive(&z) {
                out.push((zf.to_qpoly().monic(), mult));
            }
        }
        out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
        (unit, out)
    }
}

pub(crate) fn cmp_poly(a: &QPoly, b: &QPoly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

impl std::fmt::Display for QPoly {
    /// Prints in the affine variable `t`, highest power first: `t^3 + 27/4`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => {
                    if !unit_coeff {
                        write!(f, "*")?;
                    }
                    write!(f, "t")?;
                }
                _ => {
                    if !unit_coeff {
                        write!(f, "*")?;
                    }
                    write!(f, "t^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Integer polynomial, dense ascending coefficients, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> ZPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| Q::from_big(c.clone(), BigInt::one()))
                .collect(),
        )
    }

    /// Exact division over Z, `None` if it fails at any step.
    fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero());
        if self.is_zero() {
            return Some(ZPoly::new(Vec::new()));
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let dl = d.lc();
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let (c, r) = rem[k].div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k - dd + i] -= &c * dc;
                }
            }
            quo[k - dd] = c;
        }
        rem.iter().all(|c| c.is_zero()).then(|| ZPoly::new(quo))
    }

    /// Content and primitive part with positive leading coefficient.
    fn primitive(&self) -> ZPoly {
        assert!(!self.is_zero());
        let mut content = BigInt::zero();
        for c in &self.coeffs {
            content = content.gcd(c);
        }
        if self.lc().is_negative() {
            content = -content;
        }
        ZPoly::new(self.coeffs.iter().map(|c| c / &content).collect())
    }
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a small prime.

type PPoly = Vec<u64>; // ascending coefficients in [0, p)

fn p_trim(mut a: PPoly) -> PPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn p_deg(a: &PPoly) -> usize {
    a.len().saturating_sub(1)
}

fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mul(acc, a, p);
        }
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    acc
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

fn p_sub(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let n = a.len().max(b.len());
    p_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn p_mul(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + fp_mul(x, y, p)) % p;
        }
    }
    p_trim(out)
}

fn p_divrem(a: &PPoly, d: &PPoly, p: u64) -> (PPoly, PPoly) {
    assert!(!d.is_empty());
    if a.len() < d.len() {
        return (Vec::new(), a.clone());
    }
    let mut rem = a.clone();
    let dd = p_deg(d);
    let inv = fp_inv(*d.last().unwrap(), p);
    let mut quo = vec![0u64; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = fp_mul(rem[k], inv, p);
        if c != 0 {
            for (i, &dc) in d.iter().enumerate() {
                rem[k - dd + i] = (rem[k - dd + i] + p - fp_mul(c, dc, p)) % p;
            }
        }
        quo[k - dd] = c;
    }
    (p_trim(quo), p_trim(rem))
}

fn p_monic(a: &PPoly, p: u64) -> PPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let inv = fp_inv(*a.last().unwrap(), p);
    a.iter().map(|&c| fp_mul(c, inv, p)).collect()
}

fn p_gcd(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = p_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    p_monic(&a, p)
}

fn p_derivative(a: &PPoly, p: u64) -> PPoly {
    p_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| fp_mul(i as u64 % p, c, p))
            .collect(),
    )
}

fn z_mod_p(f: &ZPoly, p: u64) -> PPoly {
    use num_traits::ToPrimitive;
    let pp = BigInt::from(p);
    p_trim(
        f.coeffs
            .iter()
            .map(|c| c.mod_floor(&pp).to_u64().expect("reduced residue fits"))
            .collect(),
    )
}

/// x^e mod f over F_p by square-and-multiply.
fn p_pow_x_mod(e: u64, f: &PPoly, p: u64) -> PPoly {
    let mut base = vec![0, 1]; // x
    base = p_divrem(&base, f, p).1;
    let mut acc = vec![1];
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = p_divrem(&p_mul(&acc, &base, p), f, p).1;
        }
        base = p_divrem(&p_mul(&base, &base, p), f, p).1;
        e >>= 1;
    }
    acc
}

/// Nullspace basis of an n x n matrix over F_p (row-major).
fn p_nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pr);
        let inv = fp_inv(m[row][col], p);
        for x in m[row].iter_mut() {
            *x = fp_mul(*x, inv, p);
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..n {
                    let t = fp_mul(factor, m[row][c], p);
                    m[r][c] = (m[r][c] + p - t) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: std::collections::BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = (p - m[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Berlekamp factorization of a monic squarefree polynomial over F_p.
fn berlekamp(f: &PPoly, p: u64) -> Vec<PPoly> {
    let n = p_deg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    // Rows r_j = x^{jp} mod f; the Berlekamp subalgebra is the nullspace of
    // A with A[i][j] = r_j[i] - delta_ij.
    let xp = p_pow_x_mod(p, f, p);
    let mut rj = vec![1u64]; // r_0 = 1
    let mut a = vec![vec![0u64; n]; n];
    for j in 0..n {
        for i in 0..n {
            let c = rj.get(i).copied().unwrap_or(0);
            a[i][j] = if i == j { (c + p - 1) % p } else { c };
        }
        if j + 1 < n {
            rj = p_divrem(&p_mul(&rj, &xp, p), f, p).1;
        }
    }
    let basis = p_nullspace(a, p);
    let r = basis.len();
    let mut factors = vec![f.clone()];
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let v = p_trim(v.clone());
        if p_deg(&v) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if p_deg(&u) <= 1 {
                next.push(u);
                continue;
            }
            let mut w = u;
            for c in 0..p {
                if p_deg(&w) == 0 {
                    break;
                }
                let mut shifted = v.clone();
                shifted[0] = (shifted[0] + p - c) % p;
                let g = p_gcd(&w, &p_trim(shifted), p);
                if p_deg(&g) > 0 && p_deg(&g) < p_deg(&w) {
                    let (q, rem) = p_divrem(&w, &g, p);
                    debug_assert!(rem.is_empty());
                    w = p_monic(&q, p);
                    next.push(g);
                }
            }
            if p_deg(&w) > 0 {
                next.push(w);
            }
        }
        factors = next;
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())));
    factors
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic, plain representatives in [0, m)).

fn zm_reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_reduce(&out, m)
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let out: Vec<BigInt> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
            x + y
        })
        .collect();
    zm_reduce(&out, m)
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let out: Vec<BigInt> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
            x - y
        })
        .collect();
    zm_reduce(&out, m)
}

/// Division by a monic polynomial over Z/m.
fn zm_divrem_monic(a: &[BigInt], h: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(h.last().is_some_and(|c| c.is_one()));
    if a.len() < h.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let dd = h.len() - 1;
    let mut quo = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if !c.is_zero() {
            for (i, hc) in h.iter().enumerate() {
                let t = (&c * hc).mod_floor(m);
                rem[k - dd + i] = (&rem[k - dd + i] - t).mod_floor(m);
            }
        }
        quo[k - dd] = c;
    }
    (zm_reduce(&quo, m), zm_reduce(&rem, m))
}

/// One quadratic Hensel step: given f = g*h and s*g + t*h = 1 modulo m,
/// returns the same data modulo m^2 (with h, and hence g for monic f,
/// staying monic).
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let e = zm_sub(f, &zm_mul(g, h, m2), m2);
    let (q, r) = zm_divrem_monic(&zm_mul(s, &e, m2), h, m2);
    let g1 = zm_add(&zm_add(g, &zm_mul(t, &e, m2), m2), &zm_mul(&q, g, m2), m2);
    let h1 = zm_add(h, &r, m2);
    let one = vec![BigInt::one()];
    let e2 = zm_sub(
        &zm_add(&zm_mul(s, &g1, m2), &zm_mul(t, &h1, m2), m2),
        &one,
        m2,
    );
    let (c, d) = zm_divrem_monic(&zm_mul(s, &e2, m2), &h1, m2);
    let s1 = zm_sub(s, &d, m2);
    let t1 = zm_sub(&zm_sub(t, &zm_mul(t, &e2, m2), m2), &zm_mul(&c, &g1, m2), m2);
    (g1, h1, s1, t1)
}

/// Bezout cofactors over F_p for coprime (g, h): s*g + t*h = 1 with
/// deg s < deg h and deg t < deg g.
fn p_bezout(g: &PPoly, h: &PPoly, p: u64) -> (PPoly, PPoly) {
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1): (PPoly, PPoly) = (vec![1], Vec::new());
    while !r1.is_empty() {
        let (q, r) = p_divrem(&r0, &r1, p);
        let ns = p_sub(&s0, &p_mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
    }
    debug_assert_eq!(p_deg(&r0), 0);
    let inv = fp_inv(r0[0], p);
    let s: PPoly = p_trim(s0.iter().map(|&c| fp_mul(c, inv, p)).collect());
    // keep deg s < deg h, then solve t = (1 - s*g) / h exactly
    let (_, s) = p_divrem(&s, h, p);
    let one: PPoly = vec![1];
    let num = p_sub(&one, &p_mul(&s, g, p), p);
    let (t, tr) = p_divrem(&num, h, p);
    debug_assert!(tr.is_empty());
    (s, t)
}

fn p_to_z(a: &PPoly) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn p_product(parts: &[PPoly], p: u64) -> PPoly {
    let mut acc: PPoly = vec![1];
    for q in parts {
        acc = p_mul(&acc, q, p);
    }
    acc
}

/// Lifts the monic factorization `f = prod parts_i mod p` (f monic mod
/// big_mod = p^(2^j)) to a monic factorization mod big_mod, splitting the
/// factor list in halves and lifting each pair quadratically.
fn lift_tree(f: &[BigInt], parts: &[PPoly], p: u64, big_mod: &BigInt) -> Vec<Vec<BigInt>> {
    if parts.len() == 1 {
        return vec![f.to_vec()];
    }
    let (left, right) = parts.split_at(parts.len() / 2);
    let g0 = p_product(left, p);
    let h0 = p_product(right, p);
    let (s0, t0) = p_bezout(&g0, &h0, p);
    let mut g = p_to_z(&g0);
    let mut h = p_to_z(&h0);
    let mut s = p_to_z(&s0);
    let mut t = p_to_z(&t0);
    let mut m = BigInt::from(p);
    while &m < big_mod {
        let m2 = &m * &m;
        let fm = zm_reduce(f, &m2);
        let (g1, h1, s1, t1) = hensel_step(&fm, &g, &h, &s, &t, &m2);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    let mut out = lift_tree(&g, left, p, big_mod);
    out.extend(lift_tree(&h, right, p, big_mod));
    out
}

// ---------------------------------------------------------------------------
// Zassenhaus recombination.

fn small_primes(limit: u64) -> Vec<u64> {
    let mut sieve = vec![true; limit as usize + 1];
    let mut out = Vec::new();
    for n in 2..=limit as usize {
        if sieve[n] {
            if n > 2 {
                out.push(n as u64);
            }
            let mut k = n * n;
            while k <= limit as usize {
                sieve[k] = false;
                k += n;
            }
        }
    }
    out
}

fn symmetric_rep(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Factors a primitive squarefree integer polynomial (positive leading
/// coefficient, degree >= 1) into primitive irreducible integer polynomials.
pub fn factor_squarefree_primitive(f: &ZPoly) -> Vec<ZPoly> {
    if f.degree() == 1 {
        return vec![f.clone()];
    }
    let lc = f.lc();
    let p = small_primes(10_000)
        .into_iter()
        .find(|&p| {
            if (&lc % p).is_zero() {
                return false;
            }
            let fp = z_mod_p(f, p);
            let g = p_gcd(&fp, &p_derivative(&fp, p), p);
            p_deg(&g) == 0
        })
        .expect("a squarefree integer polynomial is squarefree modulo some small prime");
    let fp = p_monic(&z_mod_p(f, p), p);
    let modular = berlekamp(&fp, p);
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // Lift above twice the Landau-Mignotte bound on coefficients of lc * g
    // for any true factor g of f.
    let norm2: BigInt = f.coeffs.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1;
    let bound = (BigInt::one() << f.degree()) * &norm * lc.abs();
    let target = &bound * 2 + 1;
    let mut big_mod = BigInt::from(p);
    while big_mod <= target {
        big_mod = &big_mod * &big_mod;
    }

    let lc_mod = f.lc().mod_floor(&big_mod);
    let lc_inv = mod_inverse(&lc_mod, &big_mod).expect("lc invertible mod p^k");
    let f_monic: Vec<BigInt> = zm_reduce(
        &f.coeffs.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(),
        &big_mod,
    );
    let mut remaining = lift_tree(&f_monic, &modular, p, &big_mod);
    let mut cur = f.clone();
    let mut result = Vec::new();
    let mut size = 1usize;
    while 2 * size <= remaining.len() {
        let mut progressed = false;
        for mask in subsets_of_size(remaining.len(), size) {
            let mut prod = vec![cur.lc().mod_floor(&big_mod)];
            for (i, lifted) in remaining.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    prod = zm_mul(&prod, lifted, &big_mod);
                }
            }
            let candidate = ZPoly::new(prod.iter().map(|c| symmetric_rep(c, &big_mod)).collect());
            if candidate.is_zero() || candidate.degree() == 0 {
                continue;
            }
            let g = candidate.primitive();
            if let Some(q) = cur.div_exact(&g) {
                result.push(g);
                cur = q.primitive();
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) == 0)
                    .map(|(_, v)| v)
                    .collect();
                progressed = true;
                break;
            }
        }
        if !progressed {
            size += 1;
        }
    }
    if cur.degree() >= 1 {
        result.push(cur);
    }
    result.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
    });
    result
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// All bitmasks over `n` elements with exactly `size` bits set, ascending.
fn subsets_of_size(n: usize, size: usize) -> Vec<u32> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == size {
            out.push(mask);
        }
    }
    out
}
