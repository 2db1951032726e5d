use std::fmt;

/// Set of achievable weights `0..=cap`, stored as a dense bit vector.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightSet {
    words: Vec<u64>,
    cap: usize,
}

impl WeightSet {
    pub fn empty(cap: usize) -> Self {
        WeightSet {
            words: vec![0; cap / 64 + 1],
            cap,
        }
    }

    /// `{b}`, or the empty set when `b > cap`.
    pub fn singleton(cap: usize, b: u64) -> Self {
        let mut s = WeightSet::empty(cap);
        if b <= cap as u64 {
            s.insert(b as usize);
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn contains(&self, b: usize) -> bool {
        b <= self.cap && self.words[b / 64] >> (b % 64) & 1 == 1
    }

    pub fn insert(&mut self, b: usize) {
        assert!(b <= self.cap, "weight {b} above cap {}", self.cap);
        self.words[b / 64] |= 1 << (b % 64);
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.cap).filter(|&b| self.contains(b))
    }

    pub fn union_with(&mut self, other: &WeightSet) {
        debug_assert_eq!(self.cap, other.cap);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn union(&self, other: &WeightSet) -> WeightSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    /// `{a + b : a ∈ self, b ∈ other, a + b <= cap}`.
    pub fn sumset(&self, other: &WeightSet) -> WeightSet {
        debug_assert_eq!(self.cap, other.cap);
        let mut out = WeightSet::empty(self.cap);
        for shift in other.iter() {
            out.or_shifted(self, shift);
        }
        out
    }

    fn or_shifted(&mut self, src: &WeightSet, shift: usize) {
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        let n = self.words.len();
        for i in (word_shift..n).rev() {
            let j = i - word_shift;
            let mut v = src.words[j] << bit_shift;
            if bit_shift > 0 && j > 0 {
                v |= src.words[j - 1] >> (64 - bit_shift);
            }
            self.words[i] |= v;
        }
        self.trim();
    }

    fn trim(&mut self) {
        let extra = self.cap % 64 + 1;
        if extra < 64 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << extra) - 1;
        }
    }

    /// Largest member `<= b`.
    pub fn max_at_most(&self, b: usize) -> Option<usize> {
        (0..=b.min(self.cap)).rev().find(|&x| self.contains(x))
    }

    /// Smallest member `>= b`.
    pub fn min_at_least(&self, b: usize) -> Option<usize> {
        (b..=self.cap).find(|&x| self.contains(x))
    }
}

impl fmt::Debug for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
