use std::fmt;

/// A color index in `0..=d`. Color `d` is the distinguished boundary/singular color.
pub type Color = usize;

/// Largest supported dimension (colors are packed into a `u32` mask).
pub const MAX_DIMENSION: usize = 31;

/// A subset of the color set `{0, ..., d}`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// All colors `0..=d`.
    pub fn full(dimension: usize) -> Self {
        ColorSet(((1u64 << (dimension + 1)) - 1) as u32)
    }

    pub fn single(color: Color) -> Self {
        ColorSet(1 << color)
    }

    pub fn from_bits(bits: u32) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, color: Color) -> bool {
        color <= MAX_DIMENSION && self.0 & (1 << color) != 0
    }

    pub fn insert(&mut self, color: Color) {
        self.0 |= 1 << color;
    }

    pub fn with(mut self, color: Color) -> Self {
        self.insert(color);
        self
    }

    pub fn without(self, color: Color) -> Self {
        ColorSet(self.0 & !(1 << color))
    }

    /// `{0..=d} \ self`.
    pub fn complement(self, dimension: usize) -> Self {
        ColorSet(Self::full(dimension).0 & !self.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max_color(self) -> Option<Color> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        (0..=MAX_DIMENSION).filter(move |&c| self.0 & (1 << c) != 0)
    }

    /// Every subset of `{0..=d}` of the given size, in increasing mask order of
    /// lexicographic color tuples.
    pub fn subsets_of_size(dimension: usize, size: usize) -> Vec<ColorSet> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(size);
        fn rec(start: usize, d: usize, k: usize, buf: &mut Vec<Color>, out: &mut Vec<ColorSet>) {
            if buf.len() == k {
                out.push(buf.iter().copied().collect());
                return;
            }
            for c in start..=d {
                buf.push(c);
                rec(c + 1, d, k, buf, out);
                buf.pop();
            }
        }
        rec(0, dimension, size, &mut buf, &mut out);
        out
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Compact label such as `"014"` (or `"0,1,12"` once a color has two digits).
impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_color().is_some_and(|m| m >= 10);
        for (k, c) in self.iter().enumerate() {
            if wide && k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
