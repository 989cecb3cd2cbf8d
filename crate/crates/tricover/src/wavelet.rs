//! Wavelet matrix over a sequence of small integers, with rank-based
//! counting and order-statistic queries restricted to a position range.

#[derive(Clone, Debug, Default)]
struct BitVec {
    words: Vec<u64>,
    cum: Vec<u32>,
}

impl BitVec {
    fn from_bits(bits: &[bool]) -> Self {
        let nw = bits.len() / 64 + 1;
        let mut words = vec![0u64; nw];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut cum = Vec::with_capacity(nw);
        let mut acc = 0u32;
        for w in &words {
            cum.push(acc);
            acc += w.count_ones();
        }
        BitVec { words, cum }
    }

    /// Number of ones in `[0, i)`.
    #[inline]
    fn rank1(&self, i: usize) -> usize {
        let w = i / 64;
        let r = i % 64;
        let mask = if r == 0 { 0 } else { u64::MAX >> (64 - r) };
        self.cum[w] as usize + (self.words[w] & mask).count_ones() as usize
    }

    #[inline]
    fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }
}

#[derive(Clone, Debug, Default)]
pub struct WaveletMatrix {
    len: usize,
    bits: u32,
    levels: Vec<BitVec>,
    zeros: Vec<usize>,
}

impl WaveletMatrix {
    /// Values must be `< 2^bits` for the derived bit width.
    pub fn new(values: &[u32]) -> Self {
        let maxv = values.iter().copied().max().unwrap_or(0) as u64;
        let bits = (64 - maxv.leading_zeros()).max(1);
        let mut cur: Vec<u32> = values.to_vec();
        let mut levels = Vec::with_capacity(bits as usize);
        let mut zeros = Vec::with_capacity(bits as usize);
        for lvl in (0..bits).rev() {
            let b: Vec<bool> = cur.iter().map(|&v| (v >> lvl) & 1 == 1).collect();
            let bv = BitVec::from_bits(&b);
            let mut z: Vec<u32> = Vec::with_capacity(cur.len());
            let mut o: Vec<u32> = Vec::new();
            for &v in &cur {
                if (v >> lvl) & 1 == 1 {
                    o.push(v);
                } else {
                    z.push(v);
                }
            }
            zeros.push(z.len());
            z.extend(o);
            cur = z;
            levels.push(bv);
        }
        WaveletMatrix { len: values.len(), bits, levels, zeros }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of positions in `[l, r)` with value `< x`.
    pub fn count_less(&self, mut l: usize, mut r: usize, x: u64) -> usize {
        if l >= r {
            return 0;
        }
        if x >= (1u64 << self.bits) {
            return r - l;
        }
        let mut res = 0;
        for (k, lvl) in (0..self.bits).rev().enumerate() {
            let bv = &self.levels[k];
            let bit = (x >> lvl) & 1;
            let (l0, r0) = (bv.rank0(l), bv.rank0(r));
            if bit == 1 {
                res += r0 - l0;
                l = self.zeros[k] + (l - l0);
                r = self.zeros[k] + (r - r0);
            } else {
                l = l0;
                r = r0;
            }
        }
        res
    }

    /// Number of positions in `[l, r)` with value in `[lo, hi)`.
    pub fn count_range(&self, l: usize, r: usize, lo: u64, hi: u64) -> usize {
        if lo >= hi {
            return 0;
        }
        self.count_less(l, r, hi) - self.count_less(l, r, lo)
    }

    /// The `k`-th smallest (0-based) value among positions `[l, r)`.
    pub fn kth_smallest(&self, mut l: usize, mut r: usize, mut k: usize) -> u64 {
        debug_assert!(k < r - l);
        let mut val = 0u64;
        for (lv, lvl) in (0..self.bits).rev().enumerate() {
            let bv = &self.levels[lv];
            let (l0, r0) = (bv.rank0(l), bv.rank0(r));
            let nz = r0 - l0;
            if k < nz {
                l = l0;
                r = r0;
            } else {
                k -= nz;
                val |= 1 << lvl;
                l = self.zeros[lv] + (l - l0);
                r = self.zeros[lv] + (r - r0);
            }
        }
        val
    }

    /// Smallest value `>= x` among positions `[l, r)`.
    pub fn next_value(&self, l: usize, r: usize, x: u64) -> Option<u64> {
        if l >= r {
            return None;
        }
        let c = self.count_less(l, r, x);
        if c < r - l {
            Some(self.kth_smallest(l, r, c))
        } else {
            None
        }
    }

    /// Largest value `< x` among positions `[l, r)`.
    pub fn prev_value(&self, l: usize, r: usize, x: u64) -> Option<u64> {
        if l >= r {
            return None;
        }
        let c = self.count_less(l, r, x);
        if c > 0 {
            Some(self.kth_smallest(l, r, c - 1))
        } else {
            None
        }
    }
}
