//! Generator subsets as 32-bit masks.
//!
//! Bit `i` stands for generator `i` in 1-based numbering (matching the
//! standard vertex labels), so bit 0 is never set. Ranks are capped well
//! below 32 everywhere in this crate.

use crate::{Error, Result};

pub type Subset = u32;

pub const EMPTY: Subset = 0;

pub fn singleton(i: u8) -> Subset {
    debug_assert!((1..32).contains(&i));
    1u32 << i
}

/// `{a, a+1, …, b}`; empty when `a > b`.
pub fn interval(a: u8, b: u8) -> Subset {
    if a > b {
        return EMPTY;
    }
    debug_assert!(a >= 1 && b < 32);
    let hi = (1u64 << (b + 1)) - 1;
    let lo = (1u64 << a) - 1;
    (hi & !lo) as Subset
}

/// The full index set `{1, …, n}`.
pub fn full(n: u8) -> Subset {
    interval(1, n)
}

pub fn contains(s: Subset, i: u8) -> bool {
    s >> i & 1 == 1
}

pub fn card(s: Subset) -> u32 {
    s.count_ones()
}

pub fn is_subset(a: Subset, b: Subset) -> bool {
    a & !b == 0
}

pub fn min_member(s: Subset) -> Option<u8> {
    (s != 0).then(|| s.trailing_zeros() as u8)
}

pub fn max_member(s: Subset) -> Option<u8> {
    (s != 0).then(|| 31 - s.leading_zeros() as u8)
}

/// Members in ascending order.
pub fn members(s: Subset) -> impl Iterator<Item = u8> {
    let mut rest = s;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as u8;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub fn from_members<I: IntoIterator<Item = u8>>(it: I) -> Subset {
    it.into_iter().map(singleton).fold(EMPTY, |a, b| a | b)
}

/// Parses a comma-separated label list; the empty string is the empty set.
pub fn parse(text: &str) -> Result<Subset> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(EMPTY);
    }
    let mut s = EMPTY;
    for part in text.split(',') {
        let i: u8 = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator label {part:?}")))?;
        if !(1..32).contains(&i) {
            return Err(Error::Parse(format!("generator label {i} out of range")));
        }
        s |= singleton(i);
    }
    Ok(s)
}

/// `"{2,4}"`-style display.
pub fn display(s: Subset) -> String {
    format!("{{{}}}", csv(s))
}

/// `"2,4"`-style display (CLI-friendly).
pub fn csv(s: Subset) -> String {
    members(s)
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// All subsets of `s`, ascending as masks.
pub fn subsets_of(s: Subset) -> Vec<Subset> {
    // Counting up and masking visits every submask exactly once, in order.
    let mut out = Vec::with_capacity(1 << card(s));
    let mut t: Subset = 0;
    loop {
        if t & !s == 0 {
            out.push(t);
        }
        if t >= s {
            break;
        }
        t += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_and_members() {
        assert_eq!(interval(2, 4), 0b11100);
        assert_eq!(interval(3, 2), EMPTY);
        assert_eq!(members(interval(2, 4)).collect::<Vec<_>>(), vec![2, 3, 4]);
        assert_eq!(full(3), 0b1110);
    }

    #[test]
    fn parse_roundtrip() {
        let s = parse("2,4").unwrap();
        assert_eq!(s, singleton(2) | singleton(4));
        assert_eq!(csv(s), "2,4");
        assert_eq!(parse("").unwrap(), EMPTY);
        assert!(parse("0").is_err());
    }

    #[test]
    fn submask_enumeration() {
        let subs = subsets_of(interval(1, 3));
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        let subs = subsets_of(singleton(1) | singleton(3));
        assert_eq!(subs, vec![0, 0b10, 0b1000, 0b1010]);
    }
}
