//! Subsets of a carrier with at most 64 elements, packed into `u64` masks.
//! Bit `i` set means element `i` is in the subset. All canonical orderings
//! on subsets compare the raw mask integers.

/// Mask with the low `n` bits set. `n` must be at most 64.
pub fn full(n: usize) -> u64 {
    assert!(n <= 64, "carrier too large for a bitmask: {n}");
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

pub fn contains(mask: u64, i: usize) -> bool {
    i < 64 && mask & (1 << i) != 0
}

pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Elements of the mask in ascending order.
pub fn iter(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

pub fn elems(mask: u64) -> Vec<usize> {
    iter(mask).collect()
}

pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> u64 {
    let mut mask = 0;
    for i in elems {
        assert!(i < 64, "element {i} out of bitmask range");
        mask |= 1 << i;
    }
    mask
}

/// All subsets of an n-element carrier, ascending as integers.
/// Meant for small carriers; asserts n < 64 so the count fits.
pub fn subsets(n: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64, "cannot iterate all subsets of a {n}-element carrier");
    0..(1u64 << n)
}

/// Renders a mask as `{a,b,c}` using one label per bit position.
pub fn format_subset(mask: u64, labels: &[String]) -> String {
    let names: Vec<&str> = iter(mask)
        .map(|i| labels.get(i).map(|s| s.as_str()).unwrap_or("?"))
        .collect();
    format!("{{{}}}", names.join(","))
}

/// Renders a mask as `{0,2,3}` over anonymous element indices.
pub fn format_indices(mask: u64) -> String {
    let names: Vec<String> = iter(mask).map(|i| i.to_string()).collect();
    format!("{{{}}}", names.join(","))
}
