//! p-adic symbols of integer quadratic forms, Jordan decomposition over Z_p,
//! 2-adic canonicalization and local equivalence.
//!
//! Symbols are computed directly on the given integer Gram matrix, in exact
//! arithmetic throughout. The constituent invariants of the scale-`p^m`
//! unimodular block are, for odd `p`, the rank and the Legendre symbol of
//! its determinant; for `p = 2` the rank, determinant class mod 8, the
//! even/odd type flag and the oddity (trace of a diagonalized form mod 8).

use super::factor::prime_factorization;
use super::IntegerQuadraticForm;
use crate::exact::{bareiss_det, rational_inverse, IMat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QFormError {
    #[error("form must have positive dimension")]
    ZeroDimension,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("form is singular; reduce with the saturation quotient first")]
    Singular,
    #[error("{0} is not prime")]
    CompositePrime(BigInt),
    #[error("factorization budget exhausted with composite cofactor {0}")]
    FactorizationExhausted(BigInt),
    #[error("symbols computed at different primes {0} and {1}")]
    PrimeMismatch(BigInt, BigInt),
}

/// One Jordan constituent `p^exponent * (unimodular block)` of the symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolConstituent {
    pub exponent: usize,
    pub rank: usize,
    /// Odd `p`: Legendre symbol (+1/-1) of the block determinant.
    /// `p = 2`: block determinant mod 8, in {1, 3, 5, 7}.
    pub det_class: i8,
    /// `p = 2` only: true when the block has an odd diagonal entry (type I).
    pub odd_type: Option<bool>,
    /// `p = 2` only: oddity in Z/8.
    pub oddity: Option<u8>,
}

/// Conway–Sloane style local symbol of a nondegenerate form at a prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicSymbol {
    pub prime: BigInt,
    pub constituents: Vec<SymbolConstituent>,
    /// Whether the 2-adic canonicalization (oddity fusion, sign walking)
    /// has been applied.
    pub canonical: bool,
}

impl PadicSymbol {
    /// List rendering, matching the reference tool output:
    /// `[m, r, e]` triples for odd `p`, `[m, r, d, t, o]` quintuples at 2.
    pub fn to_list_string(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.constituents.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            if self.prime == BigInt::from(2) {
                write!(
                    out,
                    "[{}, {}, {}, {}, {}]",
                    c.exponent,
                    c.rank,
                    c.det_class,
                    c.odd_type.map(u8::from).unwrap_or(0),
                    c.oddity.unwrap_or(0)
                )
                .unwrap();
            } else {
                write!(out, "[{}, {}, {}]", c.exponent, c.rank, c.det_class).unwrap();
            }
        }
        out
    }

    /// Compact rendering `q^{rank sign}` per constituent, e.g. `1^{10-} 3^{6+}`.
    pub fn to_compact_string(&self) -> String {
        let mut parts = Vec::new();
        for c in &self.constituents {
            let q = self.prime.pow(c.exponent as u32);
            let sign = if self.prime == BigInt::from(2) {
                if c.det_class == 1 || c.det_class == 7 {
                    '+'
                } else {
                    '-'
                }
            } else if c.det_class > 0 {
                '+'
            } else {
                '-'
            };
            parts.push(format!("{}^{{{}{}}}", q, c.rank, sign));
        }
        parts.join(" ")
    }
}

fn mod_floor(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "inverse requires gcd 1");
    mod_floor(&e.x, m)
}

fn val_p(x: &BigInt, p: &BigInt) -> usize {
    let mut v = 0usize;
    let mut x = x.abs();
    while (&x % p).is_zero() {
        x /= p;
        v += 1;
    }
    v
}

fn legendre(a: &BigInt, p: &BigInt) -> i8 {
    let a = mod_floor(a, p);
    assert!(!a.is_zero(), "Legendre symbol of a unit");
    let e = (p - BigInt::one()) / BigInt::from(2);
    let r = a.modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Reduced-row-echelon basis of the kernel of symmetric `a` mod `p`,
/// plus the pivot columns of that basis.
fn kernel_rref_mod_p(a: &IMat, p: &BigInt) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> =
        a.iter().map(|r| r.iter().map(|x| mod_floor(x, p)).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        let Some(piv) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = mod_inverse(&m[r][c].clone(), p);
        for x in m[r].iter_mut() {
            *x = mod_floor(&(&*x * &inv), p);
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    let s = &m[r][j] * &f;
                    m[i][j] = mod_floor(&(&m[i][j] - s), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for &fc in &free {
        let mut v = vec![BigInt::zero(); n];
        v[fc] = BigInt::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = mod_floor(&-&m[ri][fc], p);
        }
        basis.push(v);
    }
    // RREF the kernel basis itself so the complement choice is canonical
    let mut piv_cols = Vec::new();
    let rows = basis.len();
    let mut r = 0usize;
    for c in 0..n {
        let Some(piv) = (r..rows).find(|&i| !basis[i][c].is_zero()) else {
            continue;
        };
        basis.swap(r, piv);
        let inv = mod_inverse(&basis[r][c].clone(), p);
        for x in basis[r].iter_mut() {
            *x = mod_floor(&(&*x * &inv), p);
        }
        for i in 0..rows {
            if i != r && !basis[i][c].is_zero() {
                let f = basis[i][c].clone();
                for j in 0..n {
                    let s = &basis[r][j] * &f;
                    basis[i][j] = mod_floor(&(&basis[i][j] - s), p);
                }
            }
        }
        piv_cols.push(c);
        r += 1;
    }
    (basis, piv_cols)
}

/// Split `a` (min p-valuation 0) into the mod-p kernel rows `b` and the
/// complement rows `c` (standard vectors at non-pivot columns).
fn split_rows(a: &IMat, p: &BigInt) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let n = a.len();
    let (b, pivots) = kernel_rref_mod_p(a, p);
    let mut c = Vec::new();
    for j in 0..n {
        if !pivots.contains(&j) {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            c.push(e);
        }
    }
    (b, c)
}

fn mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IMat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[t][j].is_zero() {
                    let prod = &a[i][t] * &b[t][j];
                    out[i][j] += prod;
                }
            }
        }
    }
    out
}

fn transpose(a: &[Vec<BigInt>]) -> IMat {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

/// Schur complement of the unit part on the kernel rows, reduced mod `p^k`
/// and divided by `p` (exact over Z_p to the working precision).
fn kernel_schur_over_p(
    a: &IMat,
    b: &[Vec<BigInt>],
    c: &[Vec<BigInt>],
    p: &BigInt,
    pk: &BigInt,
) -> IMat {
    let cact = mul(&mul(c, a), &transpose(c));
    let inv = rational_inverse(&cact).expect("unit part is invertible");
    let ba = mul(b, a);
    let bact = mul(&ba, &transpose(c));
    let babt = mul(&ba, &transpose(b));
    let r = b.len();
    let n0 = c.len();
    let mut out = vec![vec![BigInt::zero(); r]; r];
    for i in 0..r {
        for j in 0..r {
            // exact rational Schur entry
            let mut corr = BigRational::zero();
            for s in 0..n0 {
                if bact[i][s].is_zero() {
                    continue;
                }
                for t in 0..n0 {
                    if bact[j][t].is_zero() {
                        continue;
                    }
                    let term = &inv[s][t]
                        * BigRational::from(&bact[i][s] * &bact[j][t]);
                    corr += term;
                }
            }
            let exact = BigRational::from(babt[i][j].clone()) - corr;
            // canonical representative mod p^k; denominators are p-units
            let num = exact.numer();
            let den = exact.denom();
            let rep = mod_floor(&(num * mod_inverse(den, pk)), pk);
            assert!(
                (&rep % p).is_zero(),
                "kernel Schur complement must vanish mod p"
            );
            out[i][j] = rep / p;
        }
    }
    out
}

fn min_valuation(a: &IMat, p: &BigInt) -> Option<usize> {
    a.iter().flatten().filter(|x| !x.is_zero()).map(|x| val_p(x, p)).min()
}

fn divide_all(a: &IMat, q: &BigInt) -> IMat {
    a.iter().map(|r| r.iter().map(|x| x / q).collect()).collect()
}

/// Diagonalized trace mod 8 of an odd unimodular 2-adic form (the oddity).
fn trace_diag_mod_8(a: &IMat) -> u8 {
    let eight = BigInt::from(8);
    let mut m: IMat =
        a.iter().map(|r| r.iter().map(|x| mod_floor(x, &eight)).collect()).collect();
    let mut tr = BigInt::zero();
    while !m.is_empty() {
        let (u, rest) = split_odd_mod8(&m);
        tr += u;
        m = rest;
    }
    u8::try_from(mod_floor(&tr, &eight)).expect("residue fits")
}

/// Split one odd diagonal entry off a symmetric matrix over Z/8; the
/// complement basis is adjusted when the remainder would go all-even.
fn split_odd_mod8(a: &IMat) -> (BigInt, IMat) {
    let eight = BigInt::from(8);
    let n = a.len();
    if n == 1 {
        return (mod_floor(&a[0][0], &eight), Vec::new());
    }
    let i = (0..n)
        .find(|&k| a[k][k].is_odd())
        .expect("odd-type block keeps an odd diagonal entry");
    let complement = |a: &IMat, i: usize, uinv: &BigInt| -> IMat {
        let mut c: Vec<Vec<BigInt>> = Vec::with_capacity(n - 1);
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut row = vec![BigInt::zero(); n];
            row[j] = BigInt::one();
            row[i] = mod_floor(&(-&a[j][i] * uinv), &eight);
            c.push(row);
        }
        let b = mul(&mul(&c, a), &transpose(&c));
        b.iter().map(|r| r.iter().map(|x| mod_floor(x, &eight)).collect()).collect()
    };
    let u = mod_floor(&a[i][i], &eight);
    // odd residues are self-inverse mod 8
    let b = complement(a, i, &u);
    if !b.is_empty() && b.iter().enumerate().all(|(k, row)| row[k].is_even()) {
        // mix a second basis vector through e_i to keep the rest odd
        let mut t: IMat = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let i_new = if i == 0 {
            t[1][0] = mod_floor(&(BigInt::one() - &a[1][0] * &u), &eight);
            1
        } else {
            t[0][i] = mod_floor(&(BigInt::one() - &a[0][i] * &u), &eight);
            0
        };
        let a2: IMat = mul(&mul(&t, a), &transpose(&t))
            .iter()
            .map(|r| r.iter().map(|x| mod_floor(x, &eight)).collect())
            .collect();
        let u2 = mod_floor(&a2[i_new][i_new], &eight);
        assert!(u2.is_odd(), "basis fix keeps an odd pivot");
        let b2 = complement(&a2, i_new, &u2);
        assert!(
            b2.is_empty() || b2.iter().enumerate().any(|(k, row)| row[k].is_odd()),
            "complement of an odd-type block stays odd"
        );
        return (u2, b2);
    }
    (u, b)
}

fn symbol_recursive(a: &IMat, p: &BigInt, val: usize) -> Vec<SymbolConstituent> {
    let two = BigInt::from(2);
    let m0 = min_valuation(a, p).expect("nondegenerate block has nonzero entries");
    let q = p.pow(m0 as u32);
    let a = divide_all(a, &q);
    let n = a.len();
    let (b, c) = split_rows(&a, p);
    let pk = p.pow((val + 3) as u32);

    let unit_constituent = |block: &IMat| -> SymbolConstituent {
        if *p == two {
            let eight = BigInt::from(8);
            let d0 = mod_floor(&bareiss_det(block), &eight);
            assert!(d0.is_odd(), "unit block determinant is odd");
            let odd = block.iter().enumerate().any(|(i, row)| row[i].is_odd());
            SymbolConstituent {
                exponent: 0,
                rank: block.len(),
                det_class: i8::try_from(d0).expect("residue mod 8"),
                odd_type: Some(odd),
                oddity: Some(if odd { trace_diag_mod_8(block) } else { 0 }),
            }
        } else {
            SymbolConstituent {
                exponent: 0,
                rank: block.len(),
                det_class: legendre(&bareiss_det(block), p),
                odd_type: None,
                oddity: None,
            }
        }
    };

    let mut sym = Vec::new();
    if b.is_empty() {
        sym.push(unit_constituent(&a));
    } else {
        let block = mul(&mul(&c, &a), &transpose(&c));
        sym.push(unit_constituent(&block));
        let rest = kernel_schur_over_p(&a, &b, &c, p, &pk);
        debug_assert_eq!(rest.len(), n - c.len());
        for mut s in symbol_recursive(&rest, p, val) {
            s.exponent += 1;
            sym.push(s);
        }
    }
    for s in &mut sym {
        s.exponent += m0;
    }
    sym
}

fn odd_primes_of(n: &BigInt) -> Result<Vec<BigInt>, QFormError> {
    let f = prime_factorization(n);
    if let Some(cof) = f.unfactored {
        return Err(QFormError::FactorizationExhausted(cof));
    }
    Ok(f.factors.into_iter().map(|(p, _)| p).filter(|p| *p != BigInt::from(2)).collect())
}

/// The local symbol of a nondegenerate form at prime `p`. The working
/// precision is `p^(v_p(2 det) + 3)`.
pub fn padic_symbol(f: &IntegerQuadraticForm, p: &BigInt) -> Result<PadicSymbol, QFormError> {
    let det = f.det();
    if det.is_zero() {
        return Err(QFormError::Singular);
    }
    if *p < BigInt::from(2) || (*p != BigInt::from(2) && !is_probable_prime(p)) {
        return Err(QFormError::CompositePrime(p.clone()));
    }
    let val = val_p(&(BigInt::from(2) * &det), p);
    Ok(PadicSymbol {
        prime: p.clone(),
        constituents: symbol_recursive(f.gram(), p, val),
        canonical: false,
    })
}

fn is_probable_prime(p: &BigInt) -> bool {
    super::factor::miller_rabin(p)
}

/// All local symbols at primes dividing `2 det`.
pub fn genus_symbols(f: &IntegerQuadraticForm) -> Result<Vec<PadicSymbol>, QFormError> {
    let det = f.det();
    if det.is_zero() {
        return Err(QFormError::Singular);
    }
    let mut primes = vec![BigInt::from(2)];
    primes.extend(odd_primes_of(&det.abs())?);
    primes.sort();
    primes.iter().map(|p| padic_symbol(f, p)).collect()
}

// ---- canonical 2-adic reduction -------------------------------------------

fn compartments(sym: &[SymbolConstituent]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < sym.len() {
        if sym[i].odd_type == Some(true) {
            let mut comp = vec![i];
            let mut v = sym[i].exponent;
            i += 1;
            while i < sym.len() && sym[i].odd_type == Some(true) && sym[i].exponent == v + 1 {
                comp.push(i);
                v += 1;
                i += 1;
            }
            out.push(comp);
        } else {
            i += 1;
        }
    }
    out
}

fn trains(sym: &[SymbolConstituent]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize];
    for i in 1..sym.len() {
        let gap = sym[i].exponent - sym[i - 1].exponent;
        let prev_odd = sym[i - 1].odd_type == Some(true);
        let cur_odd = sym[i].odd_type == Some(true);
        let linked = (gap == 1 && (prev_odd || cur_odd)) || (gap == 2 && prev_odd && cur_odd);
        if linked {
            cur.push(i);
        } else {
            out.push(std::mem::replace(&mut cur, vec![i]));
        }
    }
    out.push(cur);
    out
}

/// Canonicalize a symbol: at odd primes the raw symbol is already canonical;
/// at 2, determinant classes collapse to signs, oddities fuse within
/// compartments and signs walk to the head of each train.
pub fn canonical_symbol(symbol: &PadicSymbol) -> PadicSymbol {
    if symbol.prime != BigInt::from(2) {
        let mut s = symbol.clone();
        s.canonical = true;
        return s;
    }
    let sym = &symbol.constituents;
    let mut can: Vec<SymbolConstituent> = sym.to_vec();
    for c in &mut can {
        c.det_class = if c.det_class == 1 || c.det_class == 7 { 1 } else { -1 };
    }
    let comps = compartments(sym);
    for comp in &comps {
        let oddity: u8 = comp
            .iter()
            .map(|&i| sym[i].oddity.unwrap_or(0) as u32)
            .sum::<u32>() as u8
            % 8;
        for &i in comp {
            can[i].oddity = Some(0);
        }
        can[comp[0]].oddity = Some(oddity);
    }
    for train in trains(sym) {
        let t = train.len();
        for i in 0..t.saturating_sub(1) {
            let t1 = train[t - i - 1];
            if can[t1].det_class == -1 {
                can[t1].det_class = 1;
                can[t1 - 1].det_class = -can[t1 - 1].det_class;
                for comp in &comps {
                    if comp.contains(&(t1 - 1)) || comp.contains(&t1) {
                        let o = can[comp[0]].oddity.unwrap_or(0);
                        can[comp[0]].oddity = Some((o + 4) % 8);
                    }
                }
            }
        }
    }
    PadicSymbol { prime: symbol.prime.clone(), constituents: can, canonical: true }
}

/// Local equivalence at every prime dividing `2 det`: determinant magnitudes
/// must share all valuations, and canonical symbols must agree.
pub fn is_locally_equivalent(
    f1: &IntegerQuadraticForm,
    f2: &IntegerQuadraticForm,
) -> Result<bool, QFormError> {
    let d1 = f1.det();
    let d2 = f2.det();
    if d1.is_zero() || d2.is_zero() {
        return Err(QFormError::Singular);
    }
    if f1.dimension() != f2.dimension() || d1.abs() != d2.abs() {
        return Ok(false);
    }
    let mut primes = vec![BigInt::from(2)];
    primes.extend(odd_primes_of(&d1.abs())?);
    for p in &primes {
        let s1 = canonical_symbol(&padic_symbol(f1, p)?);
        let s2 = canonical_symbol(&padic_symbol(f2, p)?);
        if s1.constituents != s2.constituents {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---- Jordan decomposition ---------------------------------------------------

/// A `p^exponent`-scaled unimodular Jordan block: for odd `p` the gram is
/// diagonal; at 2 it is a direct sum of odd units and even 2x2 blocks.
/// Entries are reduced representatives of the block to the working precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanBlock {
    pub exponent: usize,
    pub gram: IMat,
}

impl JordanBlock {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    /// 2-adic type: true when every diagonal entry is even.
    pub fn even_type(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, row)| row[i].is_even())
    }
}

/// Jordan decomposition of a nondegenerate form over Z_p: a list of
/// `(exponent, unimodular block)` pairs with strictly increasing exponents.
pub fn jordan_decomposition(
    f: &IntegerQuadraticForm,
    p: &BigInt,
) -> Result<Vec<JordanBlock>, QFormError> {
    let det = f.det();
    if det.is_zero() {
        return Err(QFormError::Singular);
    }
    if *p < BigInt::from(2) || !is_probable_prime(p) {
        return Err(QFormError::CompositePrime(p.clone()));
    }
    let val = val_p(&(BigInt::from(2) * &det), p);
    let pk = p.pow((val + 3) as u32);
    let mut out = Vec::new();
    jordan_recursive(f.gram(), p, val, &pk, 0, &mut out);
    Ok(out)
}

fn jordan_recursive(
    a: &IMat,
    p: &BigInt,
    val: usize,
    pk: &BigInt,
    shift: usize,
    out: &mut Vec<JordanBlock>,
) {
    if a.is_empty() {
        return;
    }
    let m0 = min_valuation(a, p).expect("nondegenerate");
    let q = p.pow(m0 as u32);
    let a = divide_all(a, &q);
    let (b, c) = split_rows(&a, p);
    if b.is_empty() {
        out.push(JordanBlock { exponent: shift + m0, gram: normalize_unit_block(&a, p, pk) });
        return;
    }
    let block = mul(&mul(&c, &a), &transpose(&c));
    out.push(JordanBlock { exponent: shift + m0, gram: normalize_unit_block(&block, p, pk) });
    let rest = kernel_schur_over_p(&a, &b, &c, p, pk);
    jordan_recursive(&rest, p, val, pk, shift + m0 + 1, out);
}

/// Bring a p-unimodular block into normal form: diagonal for odd `p`;
/// odd units followed by even 2x2 blocks at 2. Arithmetic mod `p^k`.
fn normalize_unit_block(a: &IMat, p: &BigInt, pk: &BigInt) -> IMat {
    let two = BigInt::from(2);
    let reduce = |m: &IMat, modulus: &BigInt| -> IMat {
        m.iter().map(|r| r.iter().map(|x| mod_floor(x, modulus)).collect()).collect()
    };
    let eight = BigInt::from(8);
    if *p == two {
        let mut m = reduce(a, pk);
        let mut units: Vec<BigInt> = Vec::new();
        let mut evens: Vec<IMat> = Vec::new();
        while !m.is_empty() {
            let n = m.len();
            if let Some(i) = (0..n).find(|&k| m[k][k].is_odd()) {
                let u = m[i][i].clone();
                let uinv = mod_inverse(&u, pk);
                let mut c: Vec<Vec<BigInt>> = Vec::new();
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    let mut row = vec![BigInt::zero(); n];
                    row[j] = BigInt::one();
                    row[i] = mod_floor(&(-&m[j][i] * &uinv), pk);
                    c.push(row);
                }
                units.push(mod_floor(&u, &eight));
                m = reduce(&mul(&mul(&c, &m), &transpose(&c)), pk);
            } else {
                // even type: split a 2x2 block through an odd off-diagonal
                let j = (1..n).find(|&k| m[0][k].is_odd()).expect("unimodular even block");
                let s = vec![
                    vec![m[0][0].clone(), m[0][j].clone()],
                    vec![m[j][0].clone(), m[j][j].clone()],
                ];
                let sinv_q = rational_inverse(&s).expect("2x2 block is unimodular");
                // complement rows: e_k - (coupling) S^{-1} applied to (e_0, e_j) part
                let mut c: Vec<Vec<BigInt>> = Vec::new();
                for k in 0..n {
                    if k == 0 || k == j {
                        continue;
                    }
                    let mut row = vec![BigInt::zero(); n];
                    row[k] = BigInt::one();
                    // coefficients - [m[k][0], m[k][j]] * S^{-1}
                    for (t, &col) in [0usize, j].iter().enumerate() {
                        let mut coef = BigRational::zero();
                        for (w, &wcol) in [0usize, j].iter().enumerate() {
                            let term = &sinv_q[w][t] * BigRational::from(m[k][wcol].clone());
                            coef += term;
                        }
                        let num = coef.numer();
                        let den = coef.denom();
                        row[col] = mod_floor(&-(num * mod_inverse(den, pk)), pk);
                    }
                    c.push(row);
                }
                evens.push(reduce(&s, &eight));
                m = reduce(&mul(&mul(&c, &m), &transpose(&c)), pk);
            }
        }
        let rank = units.len() + 2 * evens.len();
        let mut gram = vec![vec![BigInt::zero(); rank]; rank];
        for (i, u) in units.iter().enumerate() {
            gram[i][i] = u.clone();
        }
        for (bi, s) in evens.iter().enumerate() {
            let off = units.len() + 2 * bi;
            for r in 0..2 {
                for cn in 0..2 {
                    gram[off + r][off + cn] = s[r][cn].clone();
                }
            }
        }
        gram
    } else {
        let mut m = reduce(a, pk);
        let mut diag: Vec<BigInt> = Vec::new();
        while !m.is_empty() {
            let n = m.len();
            let i = match (0..n).find(|&k| !(&m[k][k] % p).is_zero()) {
                Some(i) => i,
                None => {
                    // make a diagonal unit: e_i += e_j for an off-diagonal unit
                    let (i, j) = (0..n)
                        .flat_map(|r| (0..n).map(move |c| (r, c)))
                        .find(|&(r, c)| r != c && !(&m[r][c] % p).is_zero())
                        .expect("unimodular block has a unit entry");
                    for k in 0..n {
                        let add = m[j][k].clone();
                        m[i][k] = mod_floor(&(&m[i][k] + &add), pk);
                    }
                    for k in 0..n {
                        let add = m[k][j].clone();
                        m[k][i] = mod_floor(&(&m[k][i] + &add), pk);
                    }
                    i
                }
            };
            let u = m[i][i].clone();
            let uinv = mod_inverse(&u, pk);
            let mut c: Vec<Vec<BigInt>> = Vec::new();
            for jj in 0..n {
                if jj == i {
                    continue;
                }
                let mut row = vec![BigInt::zero(); n];
                row[jj] = BigInt::one();
                row[i] = mod_floor(&(-&m[jj][i] * &uinv), pk);
                c.push(row);
            }
            diag.push(mod_floor(&u, p));
            m = reduce(&mul(&mul(&c, &m), &transpose(&c)), pk);
        }
        let rank = diag.len();
        let mut gram = vec![vec![BigInt::zero(); rank]; rank];
        for (i, u) in diag.into_iter().enumerate() {
            gram[i][i] = u;
        }
        gram
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat_from_i64;
    use crate::graph::{make_graph, FamilySpec};

    fn form(rows: &[Vec<i64>]) -> IntegerQuadraticForm {
        IntegerQuadraticForm::from_i64(rows).unwrap()
    }

    fn two() -> BigInt {
        BigInt::from(2)
    }

    #[test]
    fn two_adic_of_diagonal_example() {
        let f = form(&[vec![1, 0, 0, 0], vec![0, 2, 0, 0], vec![0, 0, 3, 0], vec![0, 0, 0, 4]]);
        let s = padic_symbol(&f, &two()).unwrap();
        assert_eq!(s.to_list_string(), "[0, 2, 3, 1, 4], [1, 1, 1, 1, 1], [2, 1, 1, 1, 1]");
    }

    #[test]
    fn srg16_adjacency_symbols() {
        let rook = make_graph(&FamilySpec::Rook4x4).unwrap();
        let shri = make_graph(&FamilySpec::Shrikhande).unwrap();
        let fr = IntegerQuadraticForm::new(mat_from_i64(&rook.adjacency())).unwrap();
        let fs = IntegerQuadraticForm::new(mat_from_i64(&shri.adjacency())).unwrap();
        assert_eq!(
            padic_symbol(&fr, &two()).unwrap().to_list_string(),
            "[0, 6, 7, 0, 0], [1, 4, 1, 0, 0], [2, 6, 3, 1, 4]"
        );
        assert_eq!(
            padic_symbol(&fs, &two()).unwrap().to_list_string(),
            "[0, 6, 3, 0, 0], [1, 4, 3, 1, 2], [2, 6, 5, 1, 6]"
        );
        let three = BigInt::from(3);
        assert_eq!(padic_symbol(&fr, &three).unwrap().to_list_string(), "[0, 15, 1], [1, 1, -1]");
        assert_eq!(padic_symbol(&fs, &three).unwrap().to_list_string(), "[0, 15, 1], [1, 1, -1]");
        assert!(!is_locally_equivalent(&fr, &fs).unwrap());
    }

    #[test]
    fn srg16_a_plus_i_compact() {
        for spec in [FamilySpec::Rook4x4, FamilySpec::Shrikhande] {
            let g = make_graph(&spec).unwrap();
            let mut a = g.adjacency();
            for i in 0..16 {
                a[i][i] += 1;
            }
            let f = IntegerQuadraticForm::new(mat_from_i64(&a)).unwrap();
            let s3 = padic_symbol(&f, &BigInt::from(3)).unwrap();
            assert_eq!(s3.to_compact_string(), "1^{10-} 3^{6+}");
            let s7 = padic_symbol(&f, &BigInt::from(7)).unwrap();
            assert_eq!(s7.to_compact_string(), "1^{15-} 7^{1+}");
        }
    }

    #[test]
    fn local_equivalence_identity_and_scaling() {
        let f = form(&[vec![2, 1], vec![1, 2]]);
        assert!(is_locally_equivalent(&f, &f).unwrap());
        let d1 = form(&[vec![1, 0], vec![0, 1]]);
        let d4 = form(&[vec![1, 0], vec![0, 4]]);
        assert!(!is_locally_equivalent(&d1, &d4).unwrap());
    }

    #[test]
    fn local_equivalence_congruence_invariant() {
        let rook = make_graph(&FamilySpec::Rook4x4).unwrap();
        let f = IntegerQuadraticForm::new(mat_from_i64(&rook.adjacency())).unwrap();
        // a fixed unimodular congruence
        let mut u = crate::exact::identity(16);
        for i in 0..15 {
            u[i][i + 1] = BigInt::from((i % 3) as i64 - 1);
        }
        u[3][0] = BigInt::from(2);
        let fu = f.congruence(&u);
        assert_eq!(fu.det(), f.det());
        assert!(is_locally_equivalent(&f, &fu).unwrap());
    }

    #[test]
    fn jordan_examples() {
        // A(K_2) at p = 2: a single even unimodular block
        let f = form(&[vec![0, 1], vec![1, 0]]);
        let blocks = jordan_decomposition(&f, &two()).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].exponent, 0);
        assert_eq!(blocks[0].rank(), 2);
        assert!(blocks[0].even_type());

        let f = form(&[vec![1, 0, 0], vec![0, 3, 0], vec![0, 0, 9]]);
        let blocks = jordan_decomposition(&f, &BigInt::from(3)).unwrap();
        let shape: Vec<(usize, usize)> = blocks.iter().map(|b| (b.exponent, b.rank())).collect();
        assert_eq!(shape, vec![(0, 1), (1, 1), (2, 1)]);

        let f = form(&[vec![2, 0], vec![0, 4]]);
        let blocks = jordan_decomposition(&f, &two()).unwrap();
        let shape: Vec<(usize, usize)> = blocks.iter().map(|b| (b.exponent, b.rank())).collect();
        assert_eq!(shape, vec![(1, 1), (2, 1)]);
        assert!(blocks.iter().all(|b| !b.even_type()));

        assert!(jordan_decomposition(&form(&[vec![1, 1], vec![1, 1]]), &two()).is_err());
        assert!(jordan_decomposition(&form(&[vec![1]]), &BigInt::from(4)).is_err());
    }

    #[test]
    fn symbol_det_valuation_consistency() {
        let g = make_graph(&FamilySpec::Rook4x4).unwrap();
        let f = IntegerQuadraticForm::new(mat_from_i64(&g.adjacency())).unwrap();
        let det = f.det().abs();
        for p in [2i64, 3] {
            let p = BigInt::from(p);
            let s = padic_symbol(&f, &p).unwrap();
            let total: usize = s.constituents.iter().map(|c| c.exponent * c.rank).sum();
            assert_eq!(total, super::val_p(&det, &p));
        }
    }

    #[test]
    fn canonicalization_is_idempotent_on_odd_primes() {
        let f = form(&[vec![2, 1], vec![1, 2]]);
        let s = padic_symbol(&f, &BigInt::from(3)).unwrap();
        let c = canonical_symbol(&s);
        assert_eq!(c.constituents, s.constituents);
        assert!(c.canonical);
    }
}
