//! Points and lines of the projective plane PG(2, q) for prime q.
//!
//! Points are normalized homogeneous triples, indexed as
//! (1, y, z) -> y·q + z, (0, 1, z) -> q² + z, (0, 0, 1) -> q² + q.
//! Lines use the same coordinates, so point p lies on line L iff p·L = 0.

pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn projective_order(q: u32) -> usize {
    let q = q as usize;
    q * q + q + 1
}

/// Smallest prime q with q² + q + 1 >= `size`, by trial division.
pub fn prime_for_order(size: usize) -> u32 {
    (2u32..).find(|&q| is_prime(q) && projective_order(q) >= size).expect("primes are unbounded")
}

pub(super) fn points(q: u32) -> Vec<[u32; 3]> {
    let mut pts = Vec::with_capacity(projective_order(q));
    for y in 0..q {
        for z in 0..q {
            pts.push([1, y, z]);
        }
    }
    for z in 0..q {
        pts.push([0, 1, z]);
    }
    pts.push([0, 0, 1]);
    pts
}

fn index(q: u32, p: [u32; 3]) -> usize {
    let (q, y, z) = (q as usize, p[1] as usize, p[2] as usize);
    match p {
        [1, _, _] => y * q + z,
        [0, 1, _] => q * q + z,
        _ => q * q + q,
    }
}

fn inv(a: u32, q: u32) -> u32 {
    // Fermat: a^(q-2) mod q.
    let (mut base, mut exp, mut acc) = (a as u64 % q as u64, q as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q as u64;
        }
        base = base * base % q as u64;
        exp >>= 1;
    }
    acc as u32
}

fn neg(a: u32, q: u32) -> u32 {
    (q - a % q) % q
}

/// Indices of the q+1 points p with a·p0 + b·p1 + c·p2 = 0 for `line = [a, b, c]`.
pub(super) fn line_points(q: u32, line: [u32; 3]) -> Vec<usize> {
    let [a, b, c] = line;
    let mul = |x: u32, y: u32| ((x as u64 * y as u64) % q as u64) as u32;
    let mut out = Vec::with_capacity(q as usize + 1);
    // (1, s, z): a + b s + c z = 0
    if c != 0 {
        let ic = inv(c, q);
        for s in 0..q {
            let z = mul(neg((a + mul(b, s)) % q, q), ic);
            out.push(index(q, [1, s, z]));
        }
    } else if b != 0 {
        let s = mul(neg(a, q), inv(b, q));
        for z in 0..q {
            out.push(index(q, [1, s, z]));
        }
    }
    // (0, 1, z): b + c z = 0
    if c != 0 {
        let z = mul(neg(b, q), inv(c, q));
        out.push(index(q, [0, 1, z]));
    } else if b == 0 {
        for z in 0..q {
            out.push(index(q, [0, 1, z]));
        }
    }
    // (0, 0, 1): c = 0
    if c == 0 {
        out.push(index(q, [0, 0, 1]));
    }
    debug_assert_eq!(out.len(), q as usize + 1);
    out
}
