//! Weight-enumeration kernels.
//!
//! Message-space sweeps cover all q^k - 1 nonzero codewords incrementally:
//! a Gray-code walk with bit-packed rows for q = 2, a bit-sliced two-plane
//! walk for GF(4), and an odometer with incremental row updates for general
//! q. Sphere search instead exhausts Hamming balls of growing radius against
//! the parity-check matrix; it is cheap exactly when the message space is too
//! large to sweep, and exact because levels are searched in order.
//!
//! All kernels break weight ties toward the lexicographically smallest
//! codeword, so reports are deterministic and kernel-independent.

use alloc::vec;
use alloc::vec::Vec;

use super::{
    saturating_message_count_u64, EnumMethod, LinearCode, LinearError, MinWeight, WeightReport,
};

pub(crate) fn message_space(
    code: &LinearCode,
    exclude: Option<&LinearCode>,
) -> Result<WeightReport, LinearError> {
    let checks = exclude.map(|d| d.dual().generator().row_vecs());
    let (min, witness, enumerated) = match code.q() {
        2 => gray_binary(code, checks.as_deref()),
        4 => gf4_planes(code, checks.as_deref()),
        _ => generic_odometer(code, checks.as_deref()),
    };
    Ok(WeightReport {
        min_weight: match min {
            Some(w) => MinWeight::Finite(w),
            None => MinWeight::Infinite,
        },
        witness,
        enumerated,
        method: EnumMethod::Exhaustive,
    })
}

fn pack_binary(row: &[u32], words: usize) -> Vec<u64> {
    let mut out = vec![0u64; words];
    for (i, &c) in row.iter().enumerate() {
        if c != 0 {
            out[i / 64] |= 1u64 << (i % 64);
        }
    }
    out
}

fn unpack_binary(cw: &[u64], n: usize) -> Vec<u32> {
    (0..n)
        .map(|i| ((cw[i / 64] >> (i % 64)) & 1) as u32)
        .collect()
}

/// Lexicographic comparison in codeword position order (position 0 first).
fn lex_less_binary(a: &[u64], b: &[u64]) -> bool {
    for (&wa, &wb) in a.iter().zip(b) {
        let diff = wa ^ wb;
        if diff != 0 {
            let bit = diff.trailing_zeros();
            return (wa >> bit) & 1 == 0;
        }
    }
    false
}

fn member_binary(cw: &[u64], checks: &[Vec<u64>]) -> bool {
    checks.iter().all(|h| {
        let ones: u32 = cw
            .iter()
            .zip(h)
            .map(|(&c, &hh)| (c & hh).count_ones())
            .sum();
        ones.is_multiple_of(2)
    })
}

fn gray_binary(
    code: &LinearCode,
    checks: Option<&[Vec<u32>]>,
) -> (Option<u64>, Option<Vec<u32>>, u64) {
    let n = code.n();
    let k = code.k();
    let words = n.div_ceil(64);
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|r| pack_binary(code.generator().row(r), words))
        .collect();
    let packed_checks: Option<Vec<Vec<u64>>> =
        checks.map(|cs| cs.iter().map(|h| pack_binary(h, words)).collect());

    let total: u64 = (1u64 << k) - 1;
    let mut cw = vec![0u64; words];
    let mut best_wt = u64::MAX;
    let mut best_cw: Vec<u64> = Vec::new();
    for i in 1..=total {
        // Gray step: messages i-1 and i differ in exactly one bit.
        let flip = i.trailing_zeros() as usize;
        for (c, r) in cw.iter_mut().zip(&rows[flip]) {
            *c ^= r;
        }
        let wt: u64 = cw.iter().map(|w| w.count_ones() as u64).sum();
        if wt < best_wt || (wt == best_wt && lex_less_binary(&cw, &best_cw)) {
            if let Some(cs) = &packed_checks {
                if member_binary(&cw, cs) {
                    continue;
                }
            }
            best_wt = wt;
            best_cw.clear();
            best_cw.extend_from_slice(&cw);
        }
    }
    if best_wt == u64::MAX {
        (None, None, total)
    } else {
        (Some(best_wt), Some(unpack_binary(&best_cw, n)), total)
    }
}

// GF(4) codewords as two bit planes: code c = lo + 2*hi represents
// lo + w*hi with w^2 = w + 1, so addition is plane-wise XOR.

#[derive(Clone, Default)]
struct Planes {
    lo: Vec<u64>,
    hi: Vec<u64>,
}

fn pack_gf4(row: &[u32], words: usize) -> Planes {
    let mut p = Planes {
        lo: vec![0; words],
        hi: vec![0; words],
    };
    for (i, &c) in row.iter().enumerate() {
        if c & 1 != 0 {
            p.lo[i / 64] |= 1u64 << (i % 64);
        }
        if c & 2 != 0 {
            p.hi[i / 64] |= 1u64 << (i % 64);
        }
    }
    p
}

fn scale_gf4(p: &Planes, c: u32) -> Planes {
    let words = p.lo.len();
    match c {
        0 => Planes {
            lo: vec![0; words],
            hi: vec![0; words],
        },
        1 => p.clone(),
        // w * (lo + w*hi) = hi + w*(lo ^ hi)
        2 => Planes {
            lo: p.hi.clone(),
            hi: p.lo.iter().zip(&p.hi).map(|(&a, &b)| a ^ b).collect(),
        },
        // w^2 * (lo + w*hi) = (lo ^ hi) + w*lo
        3 => Planes {
            lo: p.lo.iter().zip(&p.hi).map(|(&a, &b)| a ^ b).collect(),
            hi: p.lo.clone(),
        },
        _ => unreachable!("GF(4) scalar"),
    }
}

fn unpack_gf4(p: &Planes, n: usize) -> Vec<u32> {
    (0..n)
        .map(|i| {
            let lo = ((p.lo[i / 64] >> (i % 64)) & 1) as u32;
            let hi = ((p.hi[i / 64] >> (i % 64)) & 1) as u32;
            lo | (hi << 1)
        })
        .collect()
}

fn weight_gf4(p: &Planes) -> u64 {
    p.lo.iter()
        .zip(&p.hi)
        .map(|(&a, &b)| (a | b).count_ones() as u64)
        .sum()
}

/// Euclidean inner product of two plane vectors is zero iff both output
/// plane parities vanish: (a0 + w a1)(b0 + w b1) has low plane
/// a0b0 + a1b1 and high plane a0b1 + a1b0 + a1b1.
fn member_gf4(cw: &Planes, checks: &[Planes]) -> bool {
    checks.iter().all(|h| {
        let mut lo_par = 0u32;
        let mut hi_par = 0u32;
        for i in 0..cw.lo.len() {
            let (a0, a1, b0, b1) = (cw.lo[i], cw.hi[i], h.lo[i], h.hi[i]);
            lo_par ^= ((a0 & b0) ^ (a1 & b1)).count_ones() & 1;
            hi_par ^= ((a0 & b1) ^ (a1 & b0) ^ (a1 & b1)).count_ones() & 1;
        }
        lo_par == 0 && hi_par == 0
    })
}

fn gf4_planes(
    code: &LinearCode,
    checks: Option<&[Vec<u32>]>,
) -> (Option<u64>, Option<Vec<u32>>, u64) {
    let n = code.n();
    let k = code.k();
    let words = n.div_ceil(64);
    // All four scalar multiples of every generator row, precomputed.
    let multiples: Vec<[Planes; 4]> = (0..k)
        .map(|r| {
            let p = pack_gf4(code.generator().row(r), words);
            [
                scale_gf4(&p, 0),
                scale_gf4(&p, 1),
                scale_gf4(&p, 2),
                scale_gf4(&p, 3),
            ]
        })
        .collect();
    let packed_checks: Option<Vec<Planes>> =
        checks.map(|cs| cs.iter().map(|h| pack_gf4(h, words)).collect());

    let total = saturating_message_count_u64(4, k);
    let mut digits = vec![0u8; k];
    let mut cw = Planes {
        lo: vec![0; words],
        hi: vec![0; words],
    };
    let mut best_wt = u64::MAX;
    let mut best: Option<Vec<u32>> = None;
    let xor_mult = |cw: &mut Planes, row: usize, c: u8| {
        let m = &multiples[row][c as usize];
        for i in 0..words {
            cw.lo[i] ^= m.lo[i];
            cw.hi[i] ^= m.hi[i];
        }
    };
    for _ in 0..total {
        // Base-4 odometer; subtract the old digit multiple, add the new one.
        let mut pos = 0;
        loop {
            let old = digits[pos];
            xor_mult(&mut cw, pos, old);
            if old == 3 {
                digits[pos] = 0;
                pos += 1;
            } else {
                digits[pos] = old + 1;
                xor_mult(&mut cw, pos, old + 1);
                break;
            }
        }
        let wt = weight_gf4(&cw);
        if wt > best_wt {
            continue;
        }
        let candidate = unpack_gf4(&cw, n);
        if wt == best_wt && best.as_ref().is_some_and(|b| *b <= candidate) {
            continue;
        }
        if let Some(cs) = &packed_checks {
            if member_gf4(&cw, cs) {
                continue;
            }
        }
        best_wt = wt;
        best = Some(candidate);
    }
    if best.is_none() {
        (None, None, total)
    } else {
        (Some(best_wt), best, total)
    }
}

fn generic_odometer(
    code: &LinearCode,
    checks: Option<&[Vec<u32>]>,
) -> (Option<u64>, Option<Vec<u32>>, u64) {
    let f = code.field().clone();
    let n = code.n();
    let k = code.k();
    let q = code.q() as u32;
    let rows = code.generator().row_vecs();
    let total = saturating_message_count_u64(q as u64, k);

    let mut digits = vec![0u32; k];
    let mut cw = vec![0u32; n];
    let mut wt: u64 = 0;
    let mut best_wt = u64::MAX;
    let mut best: Option<Vec<u32>> = None;
    for _ in 0..total {
        let mut pos = 0;
        loop {
            let old = digits[pos];
            let new = if old + 1 == q { 0 } else { old + 1 };
            digits[pos] = new;
            let delta = f.sub_raw(new, old);
            for (j, &g) in rows[pos].iter().enumerate() {
                if g == 0 {
                    continue;
                }
                let prev = cw[j];
                let next = f.add_raw(prev, f.mul_raw(delta, g));
                wt += (next != 0) as u64;
                wt -= (prev != 0) as u64;
                cw[j] = next;
            }
            if new != 0 {
                break;
            }
            pos += 1;
        }
        if wt < best_wt || (wt == best_wt && best.as_ref().is_some_and(|b| cw < *b)) {
            if let Some(cs) = checks {
                let member = cs.iter().all(|h| {
                    h.iter()
                        .zip(&cw)
                        .fold(0u32, |acc, (&hc, &cc)| f.add_raw(acc, f.mul_raw(hc, cc)))
                        == 0
                });
                if member {
                    continue;
                }
            }
            best_wt = wt;
            best = Some(cw.clone());
        }
    }
    if best.is_none() {
        (None, None, total)
    } else {
        (Some(best_wt), best, total)
    }
}

/// Exhausts Hamming spheres of radius w = 1, 2, ... testing membership
/// against the parity-check matrix; candidates are normalized so the first
/// nonzero symbol is 1 (scaling preserves weight and membership). The first
/// level containing a codeword of C outside D gives the exact minimum.
pub(crate) fn sphere(
    code: &LinearCode,
    exclude: Option<&LinearCode>,
    cap: u64,
) -> Result<WeightReport, LinearError> {
    let f = code.field().clone();
    let n = code.n();
    let q = code.q() as u32;
    let c_checks = code.dual().generator().row_vecs();
    let d_checks: Option<Vec<Vec<u32>>> = exclude.map(|d| d.dual().generator().row_vecs());
    let mut examined: u64 = 0;

    for w in 1..=n {
        let mut level_best: Option<Vec<u32>> = None;
        let mut support: Vec<usize> = (0..w).collect();
        'supports: loop {
            let mut values = vec![1u32; w];
            'values: loop {
                examined += 1;
                if examined > cap {
                    return Err(LinearError::TooLargeToEnumerate {
                        cap,
                        required: saturating_message_count_u64(q as u64, code.k()),
                    });
                }
                let in_c = c_checks.iter().all(|h| {
                    support
                        .iter()
                        .zip(&values)
                        .fold(0u32, |acc, (&p, &v)| f.add_raw(acc, f.mul_raw(h[p], v)))
                        == 0
                });
                if in_c {
                    let in_d = d_checks.as_ref().is_some_and(|cs| {
                        cs.iter().all(|h| {
                            support
                                .iter()
                                .zip(&values)
                                .fold(0u32, |acc, (&p, &v)| f.add_raw(acc, f.mul_raw(h[p], v)))
                                == 0
                        })
                    });
                    if !in_d {
                        let mut full = vec![0u32; n];
                        for (&p, &v) in support.iter().zip(&values) {
                            full[p] = v;
                        }
                        if level_best.as_ref().is_none_or(|b| full < *b) {
                            level_best = Some(full);
                        }
                    }
                }
                // Advance value assignment; the first support symbol stays 1.
                let mut i = 1;
                while i < w {
                    if values[i] < q - 1 {
                        values[i] += 1;
                        continue 'values;
                    }
                    values[i] = 1;
                    i += 1;
                }
                break;
            }
            // Advance the support combination.
            let mut i = w;
            while i > 0 {
                i -= 1;
                if support[i] != i + n - w {
                    support[i] += 1;
                    for j in i + 1..w {
                        support[j] = support[j - 1] + 1;
                    }
                    continue 'supports;
                }
            }
            break;
        }
        if let Some(witness) = level_best {
            return Ok(WeightReport {
                min_weight: MinWeight::Finite(w as u64),
                witness: Some(witness),
                enumerated: examined,
                method: EnumMethod::Sphere,
            });
        }
    }
    // Unreachable for k >= 1 with C not contained in D; kept total anyway.
    Ok(WeightReport {
        min_weight: MinWeight::Infinite,
        witness: None,
        enumerated: examined,
        method: EnumMethod::Sphere,
    })
}
