//! Digit-at-a-time reference arithmetic on decimal strings.
//!
//! Shares no code or representation with the limb kernels; it exists only
//! to check them.

use std::cmp::Ordering;

use crate::error::{Result, SubError};

fn digits(s: &str) -> Result<&[u8]> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(SubError::EmptyInput);
    }
    match bytes.iter().position(|b| !b.is_ascii_digit()) {
        Some(position) => Err(SubError::InvalidDigit { position }),
        None => Ok(bytes),
    }
}

fn strip(bytes: &[u8]) -> &[u8] {
    let lead = bytes.iter().take_while(|&&b| b == b'0').count();
    if lead == bytes.len() {
        b"0"
    } else {
        &bytes[lead..]
    }
}

fn finish(mut rev: Vec<u8>) -> String {
    while rev.len() > 1 && rev.last() == Some(&b'0') {
        rev.pop();
    }
    rev.reverse();
    String::from_utf8(rev).expect("ascii digits")
}

/// Drops leading zeros, keeping a single `"0"` for zero.
pub fn strip_leading_zeros(s: &str) -> &str {
    let lead = s.bytes().take_while(|&b| b == b'0').count();
    if lead == s.len() {
        &s[s.len().saturating_sub(1)..]
    } else {
        &s[lead..]
    }
}

/// Schoolbook `a - b` one decimal digit at a time.
pub fn subtract_digitwise(a: &str, b: &str) -> Result<String> {
    let (a, b) = (strip(digits(a)?), strip(digits(b)?));
    if a.len().cmp(&b.len()).then_with(|| a.cmp(b)) == Ordering::Less {
        return Err(SubError::NegativeResult);
    }
    let mut out = Vec::with_capacity(a.len());
    let mut borrow = 0i8;
    let mut bs = b.iter().rev();
    for &da in a.iter().rev() {
        let db = bs.next().map_or(0, |&d| (d - b'0') as i8);
        let mut d = (da - b'0') as i8 - db - borrow;
        borrow = i8::from(d < 0);
        if d < 0 {
            d += 10;
        }
        out.push(b'0' + d as u8);
    }
    debug_assert_eq!(borrow, 0);
    Ok(finish(out))
}

/// Schoolbook `a + b` one decimal digit at a time.
pub fn add_digitwise(a: &str, b: &str) -> Result<String> {
    let (a, b) = (digits(a)?, digits(b)?);
    let mut out = Vec::with_capacity(a.len().max(b.len()) + 1);
    let (mut ia, mut ib) = (a.iter().rev(), b.iter().rev());
    let mut carry = 0u8;
    loop {
        let (da, db) = (ia.next(), ib.next());
        if da.is_none() && db.is_none() {
            break;
        }
        let s = da.map_or(0, |d| d - b'0') + db.map_or(0, |d| d - b'0') + carry;
        carry = s / 10;
        out.push(b'0' + s % 10);
    }
    if carry > 0 {
        out.push(b'0' + carry);
    }
    Ok(finish(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    const X: &str = "12345678909876543211234567890987654321";

    #[test]
    fn subtract_examples() {
        assert_eq!(subtract_digitwise("1000", "1").unwrap(), "999");
        assert_eq!(subtract_digitwise("7", "7").unwrap(), "0");
        assert_eq!(subtract_digitwise(X, "0").unwrap(), X);
        assert_eq!(subtract_digitwise("000100", "0099").unwrap(), "1");
    }

    #[test]
    fn add_examples() {
        assert_eq!(add_digitwise("999", "1").unwrap(), "1000");
        assert_eq!(add_digitwise("0", "0").unwrap(), "0");
        assert_eq!(add_digitwise("5", "0").unwrap(), "5");
        assert_eq!(add_digitwise("007", "3").unwrap(), "10");
    }

    #[test]
    fn errors() {
        assert_eq!(subtract_digitwise("1", "2"), Err(SubError::NegativeResult));
        assert_eq!(subtract_digitwise("99", "100"), Err(SubError::NegativeResult));
        assert_eq!(
            subtract_digitwise("1x", "0"),
            Err(SubError::InvalidDigit { position: 1 })
        );
        assert_eq!(add_digitwise("", "0"), Err(SubError::EmptyInput));
    }

    #[test]
    fn strip_keeps_one_zero() {
        assert_eq!(strip_leading_zeros("000"), "0");
        assert_eq!(strip_leading_zeros("0102"), "102");
        assert_eq!(strip_leading_zeros("7"), "7");
    }
}
