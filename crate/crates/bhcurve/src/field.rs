//! Small prime-power fields `F_{p^n}` with explicit moduli.
//!
//! A [`Field`] owns the prime `p` and a monic irreducible modulus; elements
//! are coordinate vectors over `F_p` in the basis `1, a, a^2, ...` where `a`
//! is the class of the variable. All arithmetic goes through the field
//! context (`field.mul(&x, &y)` style), so elements stay plain data and can
//! be hashed, ordered and serialized freely.
//!
//! Everything is deterministic: enumeration follows a fixed counting order,
//! and the default modulus for each `(p, n)` is the first irreducible monic
//! polynomial in that order, so two runs (and two machines) always agree.

use crate::{Error, Result};

/// Largest plain q accepted by the curve-level constructors.
pub const MAX_Q_FAST: u32 = 32;
/// Additional q values accepted when slow mode is enabled.
pub const SLOW_Q: [u32; 2] = [49, 81];

/// A prime power `q = p^nu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u32,
    pub nu: u32,
    pub q: u32,
}

impl PrimePower {
    /// Factor `q` as a prime power.
    pub fn new(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let mut p = 0;
        for cand in 2..=q {
            if q % cand == 0 {
                p = cand;
                break;
            }
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut rest = q;
        let mut nu = 0;
        while rest % p == 0 {
            rest /= p;
            nu += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Ok(PrimePower { p, nu, q })
    }

    /// Check the curve-level size gate: `q <= 32`, or 49/81 with `slow`.
    pub fn check_supported(&self, slow: bool) -> Result<()> {
        if self.q <= MAX_Q_FAST || (slow && SLOW_Q.contains(&self.q)) {
            Ok(())
        } else {
            Err(Error::UnsupportedQ(self.q))
        }
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// An element of a [`Field`]: coordinates over `F_p`, lowest degree first.
/// The vector length always equals the field degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    coords: Vec<u32>,
}

impl FieldElem {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

/// The field `F_{p^n} = F_p[x] / (modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    deg: usize,
    /// Monic modulus, length `deg + 1`, coefficients in `0..p`, low first.
    modulus: Vec<u32>,
}

impl Field {
    /// Field with the default modulus: the first monic irreducible of degree
    /// `deg` in counting order (coefficient vectors read as base-`p` integers
    /// `c0 + c1*p + ...`).
    pub fn new(p: u32, deg: usize) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!((1..=16).contains(&deg), "field degree out of supported range");
        if deg == 1 {
            return Ok(Field { p, deg, modulus: vec![0, 1] });
        }
        let total = (p as u64).pow(deg as u32);
        for k in 0..total {
            let mut f = digits(k, p, deg);
            f.push(1);
            if modp_is_irreducible(p, &f) {
                return Ok(Field { p, deg, modulus: f });
            }
        }
        unreachable!("irreducible polynomials exist in every degree");
    }

    /// Field with an explicit modulus (signed integer coefficients, low
    /// degree first). The modulus must be monic of degree >= 1 after
    /// reduction mod `p`, and irreducible.
    pub fn with_modulus(p: u32, coeffs: &[i64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut f: Vec<u32> = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect();
        while f.last() == Some(&0) {
            f.pop();
        }
        if f.len() < 2 || *f.last().unwrap() != 1 {
            return Err(Error::BadModulus);
        }
        if f.len() > 2 && !modp_is_irreducible(p, &f) {
            return Err(Error::ReducibleModulus(p));
        }
        Ok(Field { p, deg: f.len() - 1, modulus: f })
    }

    /// Convenience: the field `F_q` for a prime power, default modulus.
    pub fn of_order(q: &PrimePower) -> Field {
        Field::new(q.p, q.nu as usize).expect("p is prime")
    }

    /// Extension `F_{q^k}` of the prime field, default modulus.
    pub fn extension_of(q: &PrimePower, k: usize) -> Field {
        Field::new(q.p, q.nu as usize * k).expect("p is prime")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.deg as u32)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn check(&self, e: &FieldElem) {
        assert_eq!(
            e.coords.len(),
            self.deg,
            "element has {} coordinates but the field has degree {}",
            e.coords.len(),
            self.deg
        );
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { coords: vec![0; self.deg] }
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// The class of the variable (a generator of the field over `F_p` as an
    /// algebra; not necessarily of the multiplicative group).
    pub fn gen(&self) -> FieldElem {
        if self.deg == 1 {
            // x reduces to 0 when the modulus is x
            let root = (self.p - self.modulus[0]) % self.p;
            return self.from_int(root as i64);
        }
        let mut coords = vec![0; self.deg];
        coords[1] = 1;
        FieldElem { coords }
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        let mut coords = vec![0; self.deg];
        coords[0] = n.rem_euclid(self.p as i64) as u32;
        FieldElem { coords }
    }

    /// Build an element from explicit coordinates (low degree first; short
    /// vectors are zero-padded).
    pub fn from_coords(&self, cs: &[i64]) -> Result<FieldElem> {
        if cs.len() > self.deg {
            return Err(Error::WrongField { expected: self.deg, got: cs.len() });
        }
        let mut coords = vec![0; self.deg];
        for (i, &c) in cs.iter().enumerate() {
            coords[i] = c.rem_euclid(self.p as i64) as u32;
        }
        Ok(FieldElem { coords })
    }

    pub fn is_zero(&self, e: &FieldElem) -> bool {
        self.check(e);
        e.coords.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, e: &FieldElem) -> bool {
        self.check(e);
        e.coords[0] == 1 && e.coords[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        self.check(x);
        self.check(y);
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        FieldElem { coords }
    }

    pub fn sub(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &FieldElem) -> FieldElem {
        self.check(x);
        let coords = x.coords.iter().map(|&a| (self.p - a) % self.p).collect();
        FieldElem { coords }
    }

    pub fn mul(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        self.check(x);
        self.check(y);
        // schoolbook product, then reduction by the monic modulus
        let mut prod = vec![0u64; 2 * self.deg - 1];
        for (i, &a) in x.coords.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coords.iter().enumerate() {
                prod[i + j] += (a as u64) * (b as u64);
            }
        }
        let p64 = self.p as u64;
        for i in (self.deg..prod.len()).rev() {
            let c = prod[i] % p64;
            if c != 0 {
                // x^i = x^(i-deg) * (x^deg) = -x^(i-deg) * (low part of modulus)
                for (k, &m) in self.modulus[..self.deg].iter().enumerate() {
                    prod[i - self.deg + k] += c * ((self.p - m) % self.p) as u64;
                }
            }
            prod[i] = 0;
        }
        let coords = prod[..self.deg].iter().map(|&c| (c % p64) as u32).collect();
        FieldElem { coords }
    }

    pub fn scale(&self, k: i64, x: &FieldElem) -> FieldElem {
        self.mul(&self.from_int(k), x)
    }

    pub fn pow(&self, x: &FieldElem, mut e: u64) -> FieldElem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: &FieldElem) -> Result<FieldElem> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        // x^(order - 2); the order is at most p^16 so the exponent fits u64
        Ok(self.pow(x, self.order() - 2))
    }

    pub fn div(&self, x: &FieldElem, y: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// `x^(p^k)` - the `k`-th power of the absolute Frobenius.
    pub fn frobenius(&self, x: &FieldElem, k: u32) -> FieldElem {
        let mut acc = x.clone();
        for _ in 0..k {
            acc = self.pow(&acc, self.p as u64);
        }
        acc
    }

    /// Does `x` lie in the subfield `F_{p^d}`? Requires `d | degree`.
    pub fn in_subfield(&self, x: &FieldElem, d: usize) -> Result<bool> {
        if d == 0 || self.deg % d != 0 {
            return Err(Error::NotASubfield(self.p, d as u32));
        }
        Ok(self.frobenius(x, d as u32) == *x)
    }

    /// Deterministic enumeration of all field elements, in counting order
    /// (coordinate vectors read as base-`p` integers, `c0` least
    /// significant). The first `p` elements are `0, 1, ..., p-1`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(move |k| FieldElem { coords: digits(k, self.p, self.deg) })
    }

    /// All elements of the subfield `F_{p^d}`, in enumeration order.
    pub fn subfield_elements(&self, d: usize) -> Result<Vec<FieldElem>> {
        if d == 0 || self.deg % d != 0 {
            return Err(Error::NotASubfield(self.p, d as u32));
        }
        let out: Vec<FieldElem> = self
            .elements()
            .filter(|e| self.frobenius(e, d as u32) == *e)
            .collect();
        debug_assert_eq!(out.len() as u64, (self.p as u64).pow(d as u32));
        Ok(out)
    }

    /// First element (in enumeration order) whose square is the integer `r`.
    pub fn element_with_square(&self, r: i64) -> Result<FieldElem> {
        let target = self.from_int(r);
        self.elements()
            .find(|e| self.mul(e, e) == target)
            .ok_or(Error::NoSuchSquareRoot(r))
    }

    /// Render an element as a polynomial in the generator letter `a`,
    /// highest power first: `2*a^2+a+1`, `0`, ...
    pub fn format(&self, x: &FieldElem) -> String {
        self.check(x);
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in x.coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}*a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}*a^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// Parse the syntax produced by [`Field::format`]: sums and differences
    /// of terms `INT`, `a`, `a^K`, `INT*a`, `INT*a^K`.
    pub fn parse(&self, s: &str) -> Result<FieldElem> {
        let coeffs = parse_poly_text(s, 'a')?;
        if coeffs.len() > self.deg && coeffs[self.deg..].iter().any(|&c| c != 0) {
            // allow higher powers by reducing: build via Horner in gen()
            let mut acc = self.zero();
            let g = self.gen();
            for &c in coeffs.iter().rev() {
                acc = self.add(&self.mul(&acc, &g), &self.from_int(c));
            }
            return Ok(acc);
        }
        self.from_coords(&coeffs)
    }
}

fn digits(mut k: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for d in out.iter_mut() {
        *d = (k % p as u64) as u32;
        k /= p as u64;
    }
    out
}

/// Parse an integer-coefficient polynomial in a single variable letter.
/// Returns coefficients low degree first. Used for field elements
/// (letter `a`) and for modulus flags (letter `x`).
pub fn parse_poly_text(s: &str, letter: char) -> Result<Vec<i64>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::ParseElem(s.to_string()));
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let mut chars = compact.chars().peekable();
    let mut sign = 1i64;
    let mut expect_term = true;
    while let Some(&c) = chars.peek() {
        if c == '+' || c == '-' {
            if expect_term && c == '-' {
                sign = -sign;
            } else if expect_term {
                // leading '+' is fine
            } else {
                sign = if c == '-' { -1 } else { 1 };
            }
            chars.next();
            expect_term = true;
            continue;
        }
        // one term: [INT] [* letter [^ INT]]  or  letter [^ INT]
        let mut coeff: Option<i64> = None;
        if c.is_ascii_digit() {
            let mut v: i64 = 0;
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((d as u8 - b'0') as i64))
                        .ok_or_else(|| Error::ParseElem(s.to_string()))?;
                    chars.next();
                } else {
                    break;
                }
            }
            coeff = Some(v);
        }
        let mut power = 0usize;
        let mut saw_star = false;
        if chars.peek() == Some(&'*') {
            chars.next();
            saw_star = true;
        }
        if chars.peek() == Some(&letter) {
            chars.next();
            power = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut v: usize = 0;
                let mut any = false;
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        v = v * 10 + (d as u8 - b'0') as usize;
                        any = true;
                        chars.next();
                    } else {
                        break;
                    }
                }
                if !any || v > 64 {
                    return Err(Error::ParseElem(s.to_string()));
                }
                power = v;
            }
        } else if saw_star || coeff.is_none() {
            return Err(Error::ParseElem(s.to_string()));
        }
        let c_val = sign * coeff.unwrap_or(1);
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += c_val;
        sign = 1;
        expect_term = false;
    }
    if expect_term {
        return Err(Error::ParseElem(s.to_string()));
    }
    Ok(coeffs)
}

// ---------------------------------------------------------------------------
// mod-p polynomial helpers (self-contained so that `poly` can depend on
// `field` and not the other way round)

fn modp_trim(f: &mut Vec<u32>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn modp_mul(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] += (a as u64) * (b as u64);
        }
    }
    let mut out: Vec<u32> = out.iter().map(|&c| (c % p as u64) as u32).collect();
    modp_trim(&mut out);
    out
}

/// Remainder of `f` modulo the monic polynomial `m`.
fn modp_rem(p: u32, f: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r: Vec<u32> = f.to_vec();
    modp_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (k, &mc) in m.iter().enumerate() {
                let idx = shift + k;
                let sub = (lead as u64 * mc as u64) % p as u64;
                r[idx] = ((r[idx] as u64 + p as u64 * p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
        modp_trim(&mut r);
        if r.len() <= dm {
            break;
        }
    }
    r
}

fn modp_gcd(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    modp_trim(&mut a);
    modp_trim(&mut b);
    while !b.is_empty() {
        // make b monic for the remainder routine
        let lead = *b.last().unwrap();
        let linv = mod_inverse(lead, p);
        let bm: Vec<u32> = b.iter().map(|&c| (c as u64 * linv as u64 % p as u64) as u32).collect();
        let r = modp_rem(p, &a, &bm);
        a = b;
        b = r;
    }
    a
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p prime, a != 0 mod p
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// `x^(p^k) mod m` by iterated `p`-th powers.
fn modp_frob_power(p: u32, m: &[u32], k: u32) -> Vec<u32> {
    let mut acc = vec![0, 1]; // x
    acc = modp_rem(p, &acc, m);
    for _ in 0..k {
        acc = modp_powmod(p, &acc, p as u64, m);
    }
    acc
}

fn modp_powmod(p: u32, f: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut base = f.to_vec();
    let mut acc = vec![1];
    while e > 0 {
        if e & 1 == 1 {
            acc = modp_rem(p, &modp_mul(p, &acc, &base), m);
        }
        base = modp_rem(p, &modp_mul(p, &base, &base), m);
        e >>= 1;
    }
    acc
}

/// Irreducibility over `F_p` of a monic polynomial (low-first coefficients).
fn modp_is_irreducible(p: u32, f: &[u32]) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    // x^(p^n) == x mod f
    let xpn = modp_frob_power(p, f, n as u32);
    let x = modp_rem(p, &[0, 1], f);
    let mut diff: Vec<u32> = vec![0; xpn.len().max(x.len())];
    for (i, &c) in xpn.iter().enumerate() {
        diff[i] = c;
    }
    for (i, &c) in x.iter().enumerate() {
        diff[i] = (diff[i] + p - c) % p;
    }
    modp_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    // gcd(x^(p^(n/l)) - x, f) == 1 for every prime l | n
    let mut rest = n;
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            primes.push(d);
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    for l in primes {
        let xpk = modp_frob_power(p, f, (n / l) as u32);
        let mut diff: Vec<u32> = vec![0; xpk.len().max(2)];
        for (i, &c) in xpk.iter().enumerate() {
            diff[i] = c;
        }
        diff[1] = (diff[1] + p - 1) % p;
        modp_trim(&mut diff);
        let g = modp_gcd(p, &diff, f);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
