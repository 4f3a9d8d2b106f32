//! n-qubit Pauli operators in binary-symplectic form.
//!
//! An operator is stored as `i^phase_exp * X^x * Z^z` with `x`, `z` packed
//! bit vectors and `phase_exp` mod 4. `Y` is the Hermitian `i X Z`. Products
//! and commutation checks are exact and word-parallel.

use crate::bits::BitVec;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Single-qubit Pauli kind, used by convenience constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliKind {
    X,
    Y,
    Z,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    x: BitVec,
    z: BitVec,
    phase_exp: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            n,
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase_exp: 0,
        }
    }

    /// Build from raw symplectic components; `phase_exp` is taken mod 4.
    pub fn from_parts(n: usize, x: BitVec, z: BitVec, phase_exp: u8) -> Self {
        assert_eq!(x.len(), n);
        assert_eq!(z.len(), n);
        PauliOperator { n, x, z, phase_exp: phase_exp & 3 }
    }

    /// Single-qubit X, Y or Z embedded in n qubits (Hermitian).
    pub fn single(n: usize, qubit: usize, kind: PauliKind) -> Self {
        assert!(qubit < n);
        let mut p = PauliOperator::identity(n);
        match kind {
            PauliKind::X => p.x.set(qubit, true),
            PauliKind::Z => p.z.set(qubit, true),
            PauliKind::Y => {
                p.x.set(qubit, true);
                p.z.set(qubit, true);
                p.phase_exp = 1;
            }
        }
        p
    }

    /// Z^support (Hermitian, phase 0).
    pub fn z_on(n: usize, support: &[usize]) -> Self {
        PauliOperator::from_parts(n, BitVec::zeros(n), BitVec::from_indices(n, support), 0)
    }

    /// X^support (Hermitian, phase 0).
    pub fn x_on(n: usize, support: &[usize]) -> Self {
        PauliOperator::from_parts(n, BitVec::from_indices(n, support), BitVec::zeros(n), 0)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    #[inline]
    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    #[inline]
    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    /// The 2n-bit symplectic vector (x | z).
    pub fn symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero() && self.phase_exp == 0
    }

    /// Identity up to the tracked phase.
    pub fn is_identity_projective(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Self-adjoint iff phase_exp == x.z (mod 2).
    pub fn is_hermitian(&self) -> bool {
        (self.phase_exp & 1) == (self.x.and_count(&self.z) & 1) as u8
    }

    pub fn weight(&self) -> u32 {
        self.x.or_count(&self.z)
    }

    /// Qubits acted on non-trivially, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.x.ones().chain(self.z.ones()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn mul(&self, rhs: &PauliOperator) -> Result<PauliOperator> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        // i^p X^a Z^b * i^q X^c Z^d = i^{p+q} (-1)^{b.c} X^{a+c} Z^{b+d}
        let swap = (self.z.and_count(&rhs.x) & 1) as u8;
        let phase = (self.phase_exp + rhs.phase_exp + 2 * swap) & 3;
        let mut x = self.x.clone();
        x.xor_assign(&rhs.x);
        let mut z = self.z.clone();
        z.xor_assign(&rhs.z);
        Ok(PauliOperator { n: self.n, x, z, phase_exp: phase })
    }

    pub fn commutes_with(&self, rhs: &PauliOperator) -> Result<bool> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        let sym = (self.x.and_count(&rhs.z) + self.z.and_count(&rhs.x)) & 1;
        Ok(sym == 0)
    }

    /// Adjoint: i^{-p} Z^z X^x = i^{-p + 2 x.z} X^x Z^z.
    pub fn adjoint(&self) -> PauliOperator {
        let yp = (self.x.and_count(&self.z) & 1) as u8;
        PauliOperator {
            n: self.n,
            x: self.x.clone(),
            z: self.z.clone(),
            phase_exp: (4 - self.phase_exp + 2 * yp) & 3,
        }
    }

    /// Multiply the tracked phase by i^k.
    pub fn mul_phase(&self, k: u8) -> PauliOperator {
        let mut p = self.clone();
        p.phase_exp = (p.phase_exp + k) & 3;
        p
    }

    /// Phase of `self` relative to `other` with identical bit patterns:
    /// self = i^k * other. None if the patterns differ.
    pub fn phase_relative_to(&self, other: &PauliOperator) -> Option<u8> {
        if self.x == other.x && self.z == other.z {
            Some((4 + self.phase_exp - other.phase_exp) & 3)
        } else {
            None
        }
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Canonical text: phase prefix relative to the Hermitian letters,
        // i.e. "XIZ", "-Y", "+iXZ" (the latter only for non-Hermitian input).
        let y_count = self.x.and_count(&self.z) as u8;
        let rel = (4 + self.phase_exp - (y_count & 3)) & 3;
        match rel {
            0 => {}
            1 => write!(f, "+i")?,
            2 => write!(f, "-")?,
            3 => write!(f, "-i")?,
            _ => unreachable!(),
        }
        for i in 0..self.n {
            let c = match (self.x.get(i), self.z.get(i)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (true, true) => 'Y',
                (false, true) => 'Z',
            };
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Parse an optional phase prefix ("+", "-", "+i", "-i", "i") followed by
    /// one letter in {I, X, Y, Z} per qubit.
    fn from_str(s: &str) -> Result<PauliOperator> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut phase: u8 = 0;
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                phase = 2;
            }
            pos += 1;
        }
        if pos < bytes.len() && bytes[pos] == b'i' {
            phase = (phase + 1) & 3;
            pos += 1;
        }
        let body = &s[pos..];
        if body.is_empty() {
            return Err(Error::EmptyPauli);
        }
        let n = body.len();
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        let mut y_count: u8 = 0;
        for (i, c) in body.chars().enumerate() {
            match c {
                'I' => {}
                'X' => x.set(i, true),
                'Z' => z.set(i, true),
                'Y' => {
                    x.set(i, true);
                    z.set(i, true);
                    y_count = (y_count + 1) & 3;
                }
                other => return Err(Error::InvalidPauliChar(pos + i, other)),
            }
        }
        Ok(PauliOperator {
            n,
            x,
            z,
            phase_exp: (phase + y_count) & 3,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn single_qubit_products() {
        // X * X = I
        let x = p("X");
        assert!(x.mul(&x).unwrap().is_identity());
        // X * Z = -i Y
        let xz = p("X").mul(&p("Z")).unwrap();
        assert_eq!(format!("{}", xz), "-iY");
        // Z * X = +i Y
        let zx = p("Z").mul(&p("X")).unwrap();
        assert_eq!(format!("{}", zx), "+iY");
        // Y parses to the Hermitian iXZ
        let y = p("Y");
        assert!(y.is_hermitian());
        assert_eq!(y.phase_exp(), 1);
        // Y * Y = I
        assert!(y.mul(&y).unwrap().is_identity());
    }

    #[test]
    fn parse_format_round_trip() {
        for s in ["XIZ", "-Y", "+iXZ", "IIII", "YZXI", "-iZZ", "+XYZ"] {
            let op = p(s);
            let canonical = format!("{}", op);
            let back: PauliOperator = canonical.parse().unwrap();
            assert_eq!(op, back, "round trip failed for {s}");
        }
        // "+XYZ" canonicalizes without the plus
        assert_eq!(format!("{}", p("+XYZ")), "XYZ");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<PauliOperator>().is_err());
        assert!("-".parse::<PauliOperator>().is_err());
        assert!("XAZ".parse::<PauliOperator>().is_err());
    }

    #[test]
    fn xiz_encoding() {
        let op = p("XIZ");
        assert_eq!(op.num_qubits(), 3);
        assert_eq!(op.x_bits().ones().collect::<Vec<_>>(), vec![0]);
        assert_eq!(op.z_bits().ones().collect::<Vec<_>>(), vec![2]);
        assert_eq!(op.phase_exp(), 0);
        assert_eq!(op.support(), vec![0, 2]);
        assert_eq!(op.weight(), 2);
    }

    #[test]
    fn weight_and_support() {
        assert_eq!(PauliOperator::identity(4).weight(), 0);
        let y0 = PauliOperator::single(5, 0, PauliKind::Y);
        assert_eq!(y0.weight(), 1);
        let op = p("XIIZI");
        assert_eq!(op.support(), vec![0, 3]);
        assert_eq!(op.weight(), 2);
    }

    #[test]
    fn commutation_basics() {
        assert!(!p("XI").commutes_with(&p("ZI")).unwrap());
        assert!(p("XZ").commutes_with(&p("ZX")).unwrap());
        assert!(p("XX").commutes_with(&p("ZZ")).unwrap());
        assert!(p("XI").commutes_with(&p("IZ")).unwrap());
        assert!(p("X").commutes_with(&p("IZ")).is_err());
    }

    #[test]
    fn hermiticity_and_adjoint() {
        assert!(p("Y").is_hermitian());
        assert!(p("-Y").is_hermitian());
        assert!(!p("+iX").is_hermitian());
        let op = p("+iXZ");
        let adj = op.adjoint();
        // op * op^dagger = I
        assert!(op.mul(&adj).unwrap().is_identity());
        // Hermitian operators are self-adjoint
        let h = p("YZX");
        assert_eq!(h.adjoint(), h);
    }

    #[test]
    fn identity_law_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let id = PauliOperator::identity(8);
        for _ in 0..100 {
            let mut x = BitVec::zeros(8);
            let mut z = BitVec::zeros(8);
            for i in 0..8 {
                x.set(i, rng.random());
                z.set(i, rng.random());
            }
            let op = PauliOperator::from_parts(8, x, z, rng.random_range(0..4));
            assert_eq!(op.mul(&id).unwrap(), op);
            assert_eq!(id.mul(&op).unwrap(), op);
        }
    }
}
