//! Fixed-length bitsets with the shift-or needed for sumset folding.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `self |= src << shift`, discarding bits at or beyond `len`.
    pub fn or_shifted(&mut self, src: &BitSet, shift: usize) {
        debug_assert_eq!(self.len, src.len);
        if shift >= self.len {
            return;
        }
        let (ws, bs) = (shift / 64, (shift % 64) as u32);
        let dst = &mut self.words[ws..];
        if bs == 0 {
            for (d, s) in dst.iter_mut().zip(&src.words) {
                *d |= *s;
            }
        } else {
            dst[0] |= src.words[0] << bs;
            for (d, w) in dst[1..].iter_mut().zip(src.words.windows(2)) {
                *d |= (w[1] << bs) | (w[0] >> (64 - bs));
            }
        }
        self.trim();
    }

    pub fn or_assign(&mut self, other: &BitSet) {
        for (d, s) in self.words.iter_mut().zip(&other.words) {
            *d |= *s;
        }
    }

    fn trim(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    /// Positions in `0..len` whose bit is clear, ascending.
    pub fn zeros(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| !self.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_or_matches_naive() {
        for len in [1usize, 63, 64, 65, 200] {
            let mut src = BitSet::new(len);
            for i in (0..len).filter(|i| i % 7 == 0 || i % 11 == 3) {
                src.set(i);
            }
            for shift in [0usize, 1, 5, 63, 64, 65, 130, 199, 500] {
                let mut dst = BitSet::new(len);
                dst.or_shifted(&src, shift);
                for i in 0..len {
                    let expect = i >= shift && src.get(i - shift);
                    assert_eq!(dst.get(i), expect, "len {len} shift {shift} bit {i}");
                }
            }
        }
    }
}
