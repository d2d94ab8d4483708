//! Decimal magnitudes stored as base-10^18 limbs, most-significant first.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Result, SubError};
use crate::word::{LimbWord, LIMB_DIGITS};

/// An unsigned integer held as base-10^18 limbs, most-significant limb first.
///
/// Always canonical: at least one limb, no leading zero limbs, and zero is
/// exactly `[0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecimalMagnitude<W: LimbWord> {
    limbs: Vec<W>,
}

impl<W: LimbWord> DecimalMagnitude<W> {
    pub fn zero() -> Self {
        Self { limbs: vec![W::zero()] }
    }

    /// Builds a magnitude from limbs, most-significant first. Leading zero
    /// limbs are stripped. Fails if any limb is outside `[0, 10^18)`.
    pub fn from_limbs(limbs: impl Into<Vec<W>>) -> Result<Self> {
        let limbs = limbs.into();
        if let Some(index) = limbs.iter().position(|&l| l < W::zero() || l > W::MAX_LIMB) {
            return Err(SubError::LimbOutOfRange { index });
        }
        Ok(Self::from_limbs_unchecked(limbs))
    }

    /// Canonicalizes limbs already known to lie in `[0, 10^18)`.
    pub(crate) fn from_limbs_unchecked(mut limbs: Vec<W>) -> Self {
        let lead = limbs
            .iter()
            .position(|l| !l.is_zero())
            .unwrap_or(limbs.len().saturating_sub(1));
        limbs.drain(..lead);
        if limbs.is_empty() {
            limbs.push(W::zero());
        }
        debug_assert!(limbs.iter().all(|&l| l >= W::zero() && l <= W::MAX_LIMB));
        Self { limbs }
    }

    pub fn limbs(&self) -> &[W] {
        &self.limbs
    }

    pub fn limb_count(&self) -> usize {
        self.limbs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.len() == 1 && self.limbs[0].is_zero()
    }

    pub fn into_limbs(self) -> Vec<W> {
        self.limbs
    }
}

impl<W: LimbWord> Default for DecimalMagnitude<W> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Parses a string of ASCII decimal digits.
///
/// The string is cut into 18-character slices from the right; only the
/// leftmost slice may be shorter. Leading zeros are absorbed.
pub fn parse_magnitude<W: LimbWord>(s: &str) -> Result<DecimalMagnitude<W>> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(SubError::EmptyInput);
    }
    if let Some(position) = bytes.iter().position(|b| !b.is_ascii_digit()) {
        return Err(SubError::InvalidDigit { position });
    }

    let head = bytes.len() % LIMB_DIGITS;
    let mut limbs = Vec::with_capacity(bytes.len() / LIMB_DIGITS + 1);
    if head > 0 {
        limbs.push(slice_value(&bytes[..head]));
    }
    limbs.extend(bytes[head..].chunks_exact(LIMB_DIGITS).map(slice_value::<W>));
    Ok(DecimalMagnitude::from_limbs_unchecked(limbs))
}

fn slice_value<W: LimbWord>(digits: &[u8]) -> W {
    digits
        .iter()
        .fold(W::zero(), |acc, &d| acc * W::TEN + W::from_digit(d - b'0'))
}

/// Renders a magnitude as decimal digits. Every limb after the first is
/// zero-padded to 18 characters.
pub fn format_magnitude<W: LimbWord>(m: &DecimalMagnitude<W>) -> String {
    let mut out = String::with_capacity(m.limb_count() * LIMB_DIGITS);
    let (first, rest) = m.limbs.split_first().expect("magnitude has at least one limb");
    write!(out, "{first}").unwrap();
    for limb in rest {
        write!(out, "{limb:0width$}", width = LIMB_DIGITS).unwrap();
    }
    out
}

/// Orders two canonical magnitudes by limb count, then limb by limb from
/// the most-significant end.
pub fn compare_magnitude<W: LimbWord>(a: &DecimalMagnitude<W>, b: &DecimalMagnitude<W>) -> Ordering {
    a.limb_count()
        .cmp(&b.limb_count())
        .then_with(|| a.limbs.iter().cmp(b.limbs.iter()))
}

/// Left-pads the limbs of `m` with zeros to exactly `n` limbs. The result is
/// not canonical.
pub fn pad_to_length<W: LimbWord>(m: &DecimalMagnitude<W>, n: usize) -> Result<Vec<W>> {
    Ok(padded(m.limbs(), n)?.into_owned())
}

/// Borrowing variant of [`pad_to_length`]: no copy when `limbs` already has
/// length `n`.
pub(crate) fn padded<W: LimbWord>(limbs: &[W], n: usize) -> Result<Cow<'_, [W]>> {
    match n.cmp(&limbs.len()) {
        Ordering::Less => Err(SubError::LengthUnderflow {
            have: limbs.len(),
            want: n,
        }),
        Ordering::Equal => Ok(Cow::Borrowed(limbs)),
        Ordering::Greater => {
            let mut out = vec![W::zero(); n - limbs.len()];
            out.extend_from_slice(limbs);
            Ok(Cow::Owned(out))
        }
    }
}

impl<W: LimbWord> PartialOrd for DecimalMagnitude<W> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<W: LimbWord> Ord for DecimalMagnitude<W> {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_magnitude(self, other)
    }
}

impl<W: LimbWord> FromStr for DecimalMagnitude<W> {
    type Err = SubError;

    fn from_str(s: &str) -> Result<Self> {
        parse_magnitude(s)
    }
}

impl<W: LimbWord> fmt::Display for DecimalMagnitude<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_magnitude(self))
    }
}

impl<W: LimbWord> fmt::Debug for DecimalMagnitude<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("DecimalMagnitude").field(&self.limbs).finish()
    }
}
