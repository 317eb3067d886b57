//! Dense polynomials over a prime field `F_p`, coefficients lowest degree first.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<u64>,
}

impl Poly {
    /// Reduces coefficients mod `p` and trims leading zeros.
    pub fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, other: &Poly, p: u64) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| self.coeffs.get(i).unwrap_or(&0) + other.coeffs.get(i).unwrap_or(&0))
            .collect();
        Poly::new(c, p)
    }

    pub fn mul(&self, other: &Poly, p: u64) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % p;
            }
        }
        Poly::new(c, p)
    }

    /// Quotient and remainder by a monic divisor (schoolbook long division).
    pub fn div_rem_monic(&self, divisor: &Poly, p: u64) -> (Poly, Poly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), Poly::new(rem, p));
        }
        let mut quot = vec![0u64; rem.len() - d];
        for shift in (0..rem.len() - d).rev() {
            let lead = rem[shift + d] % p;
            if lead == 0 {
                continue;
            }
            quot[shift] = lead;
            for (i, &c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + p - (lead * c) % p) % p;
            }
        }
        rem.truncate(d);
        (Poly::new(quot, p), Poly::new(rem, p))
    }

    pub fn rem_monic(&self, divisor: &Poly, p: u64) -> Poly {
        self.div_rem_monic(divisor, p).1
    }

    pub fn divides(&self, other: &Poly, p: u64) -> bool {
        other.rem_monic(self, p).is_zero()
    }

    /// Encodes a reduced polynomial of degree `< d` as a base-`p` integer.
    pub fn to_index(&self, p: u64) -> usize {
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + c) as usize
    }

    /// Inverse of [`to_index`](Self::to_index).
    pub fn from_index(mut index: usize, p: u64, d: usize) -> Poly {
        let mut c = Vec::with_capacity(d);
        for _ in 0..d {
            c.push(index as u64 % p);
            index /= p as usize;
        }
        Poly::new(c, p)
    }

    /// All monic polynomials of exactly degree `d`.
    pub fn monic_of_degree(d: usize, p: u64) -> impl Iterator<Item = Poly> {
        let count = (p as usize).pow(d as u32);
        (0..count).map(move |i| {
            let mut c = Poly::from_index(i, p, d).coeffs;
            c.resize(d, 0);
            c.push(1);
            Poly { coeffs: c }
        })
    }

    /// Monic divisors of a monic `f`, by ascending degree then index.
    pub fn monic_divisors(f: &Poly, p: u64) -> Vec<Poly> {
        let deg = f.degree().expect("nonzero");
        (0..=deg)
            .flat_map(|d| Poly::monic_of_degree(d, p))
            .filter(|g| g.divides(f, p))
            .collect()
    }

    /// Monic `g` of positive degree with no monic divisor of degree `1..=deg/2`.
    pub fn is_irreducible(g: &Poly, p: u64) -> bool {
        match g.degree() {
            None | Some(0) => false,
            Some(deg) => (1..=deg / 2)
                .all(|d| Poly::monic_of_degree(d, p).all(|h| !h.divides(g, p))),
        }
    }
}

impl core::fmt::Display for Poly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            match (i, c) {
                (0, c) => write!(out, "{c}")?,
                (_, 1) => {}
                (_, c) => write!(out, "{c}")?,
            }
            match i {
                0 => {}
                1 => out.push('x'),
                i => write!(out, "x^{i}")?,
            }
        }
        f.write_str(&out)
    }
}
