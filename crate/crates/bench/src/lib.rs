//! Shared fixtures for the benchmark suite.

use qfikit::bits::BitVec;
use qfikit::pauli::PauliOperator;

/// Deterministic pseudo-random Hermitian Pauli, cheap enough to build inside
/// a benchmark setup loop.
pub fn mixed_pauli(n: usize, salt: u64) -> PauliOperator {
    let mut x = BitVec::zeros(n);
    let mut z = BitVec::zeros(n);
    let mut s = salt.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    for i in 0..n {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        match (s >> 33) & 3 {
            1 => x.set(i, true),
            2 => z.set(i, true),
            3 => {
                x.set(i, true);
                z.set(i, true);
            }
            _ => {}
        }
    }
    let y_parity = (x.and_count(&z) & 1) as u8;
    PauliOperator::from_parts(n, x, z, y_parity)
}
