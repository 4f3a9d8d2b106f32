//! 1- and 2-qubit Clifford gates, stored by the images of the local X/Z
//! generators under conjugation. Conjugating a global Pauli substitutes the
//! images on the gate support and leaves the rest untouched, so a layer of
//! disjoint gates updates a tableau in O(n) word operations per generator.

use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use rand::Rng;

/// Pauli on at most 2 local qubits: i^phase * X^x Z^z with bit i = local qubit i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalPauli {
    pub x: u8,
    pub z: u8,
    pub phase: u8,
}

impl LocalPauli {
    pub const fn new(x: u8, z: u8, phase: u8) -> Self {
        LocalPauli { x, z, phase: phase & 3 }
    }

    pub fn identity() -> Self {
        LocalPauli { x: 0, z: 0, phase: 0 }
    }

    pub fn mul(&self, rhs: &LocalPauli) -> LocalPauli {
        let swap = (self.z & rhs.x).count_ones() as u8 & 1;
        LocalPauli {
            x: self.x ^ rhs.x,
            z: self.z ^ rhs.z,
            phase: (self.phase + rhs.phase + 2 * swap) & 3,
        }
    }

    pub fn is_hermitian(&self) -> bool {
        (self.phase & 1) == ((self.x & self.z).count_ones() as u8 & 1)
    }

    /// Symplectic product: 1 iff the two Paulis anticommute.
    pub fn sp(&self, rhs: &LocalPauli) -> u8 {
        ((self.x & rhs.z).count_ones() + (self.z & rhs.x).count_ones()) as u8 & 1
    }
}

/// A Clifford gate on `arity` qubits given by the conjugation images of the
/// local X_i and Z_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordGate {
    arity: usize,
    x_images: Vec<LocalPauli>,
    z_images: Vec<LocalPauli>,
}

impl CliffordGate {
    pub fn new(x_images: Vec<LocalPauli>, z_images: Vec<LocalPauli>) -> Self {
        let arity = x_images.len();
        assert!((1..=2).contains(&arity));
        assert_eq!(z_images.len(), arity);
        let gate = CliffordGate { arity, x_images, z_images };
        debug_assert!(gate.is_valid(), "invalid Clifford images");
        gate
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Images must be Hermitian and reproduce the symplectic relations of the
    /// generators they replace.
    pub fn is_valid(&self) -> bool {
        let a = self.arity;
        for i in 0..a {
            if !self.x_images[i].is_hermitian() || !self.z_images[i].is_hermitian() {
                return false;
            }
            for j in 0..a {
                if self.x_images[i].sp(&self.x_images[j]) != 0 {
                    return false;
                }
                if self.z_images[i].sp(&self.z_images[j]) != 0 {
                    return false;
                }
                let expected = u8::from(i == j);
                if self.x_images[i].sp(&self.z_images[j]) != expected {
                    return false;
                }
            }
        }
        true
    }

    pub fn identity(arity: usize) -> Self {
        let x_images = (0..arity).map(|i| LocalPauli::new(1 << i, 0, 0)).collect();
        let z_images = (0..arity).map(|i| LocalPauli::new(0, 1 << i, 0)).collect();
        CliffordGate::new(x_images, z_images)
    }

    /// Hadamard: X -> Z, Z -> X.
    pub fn hadamard() -> Self {
        CliffordGate::new(vec![LocalPauli::new(0, 1, 0)], vec![LocalPauli::new(1, 0, 0)])
    }

    /// Phase gate S: X -> Y, Z -> Z.
    pub fn phase_s() -> Self {
        CliffordGate::new(vec![LocalPauli::new(1, 1, 1)], vec![LocalPauli::new(0, 1, 0)])
    }

    /// CNOT with control on local qubit 0, target on local qubit 1.
    pub fn cnot() -> Self {
        CliffordGate::new(
            vec![LocalPauli::new(0b11, 0, 0), LocalPauli::new(0b10, 0, 0)],
            vec![LocalPauli::new(0, 0b01, 0), LocalPauli::new(0, 0b11, 0)],
        )
    }

    pub fn cz() -> Self {
        CliffordGate::new(
            vec![LocalPauli::new(0b01, 0b10, 0), LocalPauli::new(0b10, 0b01, 0)],
            vec![LocalPauli::new(0, 0b01, 0), LocalPauli::new(0, 0b10, 0)],
        )
    }

    /// Uniformly random 2-qubit Clifford (mod global phase): rejection-sample
    /// the symplectic images, then random Hermitian signs. The accept counts
    /// 15 * 8 * 3 * 2 * 16 = 11520 match the group order.
    pub fn random_two_qubit<R: Rng + ?Sized>(rng: &mut R) -> Self {
        fn rand_vec<R: Rng + ?Sized>(rng: &mut R) -> LocalPauli {
            LocalPauli::new(rng.random_range(0..4u8), rng.random_range(0..4u8), 0)
        }
        let p1 = loop {
            let v = rand_vec(rng);
            if v.x != 0 || v.z != 0 {
                break v;
            }
        };
        let q1 = loop {
            let v = rand_vec(rng);
            if p1.sp(&v) == 1 {
                break v;
            }
        };
        let p2 = loop {
            let v = rand_vec(rng);
            if (v.x != 0 || v.z != 0) && p1.sp(&v) == 0 && q1.sp(&v) == 0 {
                break v;
            }
        };
        let q2 = loop {
            let v = rand_vec(rng);
            if p1.sp(&v) == 0 && q1.sp(&v) == 0 && p2.sp(&v) == 1 {
                break v;
            }
        };
        let sign = |v: LocalPauli, rng: &mut R| {
            let y = (v.x & v.z).count_ones() as u8 & 1;
            let flip = if rng.random::<bool>() { 2 } else { 0 };
            LocalPauli::new(v.x, v.z, y + flip)
        };
        CliffordGate::new(
            vec![sign(p1, rng), sign(p2, rng)],
            vec![sign(q1, rng), sign(q2, rng)],
        )
    }

    fn conjugate_local(&self, p: LocalPauli) -> LocalPauli {
        let mut r = LocalPauli::identity();
        for i in 0..self.arity {
            if p.x >> i & 1 == 1 {
                r = r.mul(&self.x_images[i]);
            }
        }
        for i in 0..self.arity {
            if p.z >> i & 1 == 1 {
                r = r.mul(&self.z_images[i]);
            }
        }
        r.phase = (r.phase + p.phase) & 3;
        r
    }
}

/// A Clifford gate placed on specific qubits of an n-qubit register.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacedGate {
    pub qubits: Vec<usize>,
    pub gate: CliffordGate,
}

impl PlacedGate {
    pub fn new(qubits: Vec<usize>, gate: CliffordGate) -> Self {
        assert_eq!(qubits.len(), gate.arity());
        let mut sorted = qubits.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), qubits.len(), "repeated qubit in gate support");
        PlacedGate { qubits, gate }
    }

    /// U P U^dagger for a global Pauli P.
    pub fn conjugate(&self, p: &PauliOperator) -> Result<PauliOperator> {
        let n = p.num_qubits();
        for &q in &self.qubits {
            if q >= n {
                return Err(Error::DimensionMismatch(q, n));
            }
        }
        // Split P = rest * local (disjoint supports commute, no phase cost).
        let mut local = LocalPauli::identity();
        let mut rest_x = p.x_bits().clone();
        let mut rest_z = p.z_bits().clone();
        for (li, &q) in self.qubits.iter().enumerate() {
            if rest_x.get(q) {
                local.x |= 1 << li;
                rest_x.set(q, false);
            }
            if rest_z.get(q) {
                local.z |= 1 << li;
                rest_z.set(q, false);
            }
        }
        if local.x == 0 && local.z == 0 {
            return Ok(p.clone());
        }
        let rest = PauliOperator::from_parts(n, rest_x, rest_z, p.phase_exp());
        let out = self.gate.conjugate_local(local);
        let mut img_x = crate::bits::BitVec::zeros(n);
        let mut img_z = crate::bits::BitVec::zeros(n);
        for (li, &q) in self.qubits.iter().enumerate() {
            if out.x >> li & 1 == 1 {
                img_x.set(q, true);
            }
            if out.z >> li & 1 == 1 {
                img_z.set(q, true);
            }
        }
        let image = PauliOperator::from_parts(n, img_x, img_z, out.phase);
        rest.mul(&image)
    }
}
