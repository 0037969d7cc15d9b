//! Small worked structures used across the test suites and handy for
//! exploring the API from a REPL or the CLI.

use crate::context::FormalContext;
use crate::galois::GaloisConnection;
use crate::poset::Poset;

/// Two connections between the chains 1<2<3 and 1<2<3<4 (indices 0-based,
/// labels the numerals). The first sends 3,2 to 2 and 1 to 4; the second
/// sends 3 to 1, 2 to 3, 1 to 4. Their round trips on P coincide, while
/// on Q the second is strictly coarser, so the pair separates the P-side
/// and Q-side comparisons.
pub fn chain_pair() -> (GaloisConnection, GaloisConnection) {
    let p = Poset::chain(3);
    let q = Poset::chain(4);
    let a = GaloisConnection::from_tables(p.clone(), q.clone(), vec![3, 1, 1], vec![2, 2, 0, 0])
        .expect("shape");
    let b = GaloisConnection::from_tables(p, q, vec![3, 2, 0], vec![2, 1, 1, 0]).expect("shape");
    (a, b)
}

/// Two distinct perfect connections from the diamond to itself: both swap
/// bot and top; one fixes the middle elements, the other swaps them. Each
/// is its own adjoint, and every element is a node.
pub fn diamond_pair() -> (GaloisConnection, GaloisConnection) {
    let d = Poset::diamond();
    let fixing =
        GaloisConnection::from_tables(d.clone(), d.clone(), vec![3, 1, 2, 0], vec![3, 1, 2, 0])
            .expect("shape");
    let swapping =
        GaloisConnection::from_tables(d.clone(), d, vec![3, 2, 1, 0], vec![3, 2, 1, 0])
            .expect("shape");
    (fixing, swapping)
}

/// A 3x3 context: g1 has m1 and m2, g2 has m2, g3 has m3.
/// Five concepts, enough structure to exercise every lattice operation.
pub fn toy_context() -> FormalContext {
    FormalContext::from_pairs(3, 3, &[(0, 0), (0, 1), (1, 1), (2, 2)]).expect("shape")
}

/// A grab bag of valid connections over assorted carrier shapes, used by
/// invariant tests that want coverage rather than a specific example.
pub fn assorted_connections() -> Vec<GaloisConnection> {
    let mut out = Vec::new();
    let (a, b) = chain_pair();
    out.push(a);
    out.push(b);
    let (m1, m2) = diamond_pair();
    out.push(m1);
    out.push(m2);
    // Constant to top, chain into diamond.
    out.push(
        GaloisConnection::from_tables(
            Poset::chain(3),
            Poset::diamond(),
            vec![3, 3, 3],
            vec![2, 2, 2, 2],
        )
        .expect("shape"),
    );
    // A chain pair with a strict jump.
    out.push(
        GaloisConnection::from_tables(
            Poset::chain(2),
            Poset::chain(3),
            vec![2, 0],
            vec![1, 0, 0],
        )
        .expect("shape"),
    );
    // One-element carriers.
    out.push(
        GaloisConnection::from_tables(Poset::chain(1), Poset::chain(1), vec![0], vec![0])
            .expect("shape"),
    );
    // Empty carriers.
    out.push(
        GaloisConnection::from_tables(Poset::antichain(0), Poset::antichain(0), vec![], vec![])
            .expect("shape"),
    );
    out
}
