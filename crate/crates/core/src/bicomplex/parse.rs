//! Text grammar for bicomplex values.
//!
//! Cartesian: `a + b i1 + c i2 + d j`, any subset of terms in any order,
//! signs allowed, a bare unit means coefficient 1 (`-j`, `i1`).
//! Idempotent: `[re1+im1 i1 ; re2+im2 i1]`.
//!
//! Numbers are written with the shortest representation that reparses to
//! the same `f64` (at most 17 significant digits), so the cartesian form
//! round-trips bit for bit.

use num_complex::Complex64;

use super::Bicomplex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Unit {
    One,
    I1,
    I2,
    J,
}

impl Unit {
    fn slot(self) -> usize {
        match self {
            Unit::One => 0,
            Unit::I1 => 1,
            Unit::I2 => 2,
            Unit::J => 3,
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<Result<f64>> {
        let bytes = self.rest().as_bytes();
        let mut i = 0;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
            i += 1;
        }
        if i == 0 {
            return None;
        }
        if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
            let mut k = i + 1;
            if k < bytes.len() && (bytes[k] == b'+' || bytes[k] == b'-') {
                k += 1;
            }
            let digits_start = k;
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            if k > digits_start {
                i = k;
            }
        }
        let text = &self.rest()[..i];
        self.pos += i;
        Some(
            text.parse::<f64>()
                .map_err(|_| Error::Parse(format!("malformed number `{text}`"))),
        )
    }

    fn unit(&mut self) -> Option<Unit> {
        let r = self.rest();
        let (unit, len) = if r.starts_with("i1") {
            (Unit::I1, 2)
        } else if r.starts_with("i2") {
            (Unit::I2, 2)
        } else if r.starts_with('j') {
            (Unit::J, 1)
        } else {
            return None;
        };
        self.pos += len;
        Some(unit)
    }
}

/// Parse a signed sum of terms into cartesian slots.
fn parse_terms(src: &str, allowed: &[Unit]) -> Result<[f64; 4]> {
    let mut lx = Lexer::new(src);
    let mut slots = [0.0f64; 4];
    let mut seen = [false; 4];
    let mut first = true;
    loop {
        lx.skip_ws();
        if lx.peek().is_none() {
            if first {
                return Err(Error::Parse("empty expression".into()));
            }
            break;
        }
        let mut negative = false;
        if lx.eat('+') {
        } else if lx.eat('-') {
            negative = true;
        } else if !first {
            return Err(Error::Parse(format!("expected `+` or `-` before `{}`", lx.rest())));
        }
        lx.skip_ws();
        let coeff = match lx.number() {
            Some(v) => Some(v?),
            None => None,
        };
        lx.skip_ws();
        if coeff.is_some() && lx.eat('*') {
            lx.skip_ws();
            if lx.peek().is_none() {
                return Err(Error::Parse("expected a unit after `*`".into()));
            }
        }
        let unit = lx.unit();
        let (coeff, unit) = match (coeff, unit) {
            (Some(c), Some(u)) => (c, u),
            (Some(c), None) => (c, Unit::One),
            (None, Some(u)) => (1.0, u),
            (None, None) => {
                return Err(Error::Parse(format!("expected a number or unit at `{}`", lx.rest())))
            }
        };
        if !allowed.contains(&unit) {
            return Err(Error::Parse(format!("unit {unit:?} not allowed here")));
        }
        let slot = unit.slot();
        if seen[slot] {
            return Err(Error::Parse(format!("repeated {unit:?} term")));
        }
        seen[slot] = true;
        let value = if negative { -coeff } else { coeff };
        if !value.is_finite() {
            return Err(Error::NonFinite { index: slot });
        }
        slots[slot] = value;
        first = false;
    }
    Ok(slots)
}

fn parse_complex(src: &str) -> Result<Complex64> {
    let s = parse_terms(src, &[Unit::One, Unit::I1])?;
    Ok(Complex64::new(s[0], s[1]))
}

/// Parse either the cartesian or the bracketed idempotent form.
pub fn parse_bicomplex(src: &str) -> Result<Bicomplex> {
    let s = src.trim();
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse("missing closing `]`".into()))?;
        let mut parts = inner.split(';');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse("idempotent form needs exactly two `;`-separated parts".into()));
        };
        return Ok(Bicomplex::from_idempotent(parse_complex(a)?, parse_complex(b)?));
    }
    let c = parse_terms(s, &[Unit::One, Unit::I1, Unit::I2, Unit::J])?;
    Ok(Bicomplex::new(c[0], c[1], c[2], c[3]))
}

fn fmt_num(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn signed(x: f64) -> (char, String) {
    (if x.is_sign_negative() { '-' } else { '+' }, fmt_num(x.abs()))
}

/// `x0 + x1 i1 + x2 i2 + x3 j`, all four terms always present.
pub fn format_cartesian(x: &Bicomplex) -> String {
    let mut out = fmt_num(x.x0);
    for (v, unit) in [(x.x1, "i1"), (x.x2, "i2"), (x.x3, "j")] {
        let (s, m) = signed(v);
        out.push_str(&format!(" {s} {m} {unit}"));
    }
    out
}

/// `[re1+im1 i1 ; re2+im2 i1]`.
pub fn format_idempotent(x: &Bicomplex) -> String {
    let (a, b) = x.to_idempotent();
    let part = |c: Complex64| {
        let (s, m) = signed(c.im);
        format!("{}{s}{m} i1", fmt_num(c.re))
    };
    format!("[{} ; {}]", part(a), part(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cartesian_forms() {
        assert_eq!(parse_bicomplex("0 + 0 i1 + 0 i2 + 1 j").unwrap(), Bicomplex::J);
        assert_eq!(parse_bicomplex("3").unwrap(), Bicomplex::real(3.0));
        assert_eq!(parse_bicomplex("-1").unwrap(), Bicomplex::real(-1.0));
        assert_eq!(parse_bicomplex("-j").unwrap(), -Bicomplex::J);
        assert_eq!(
            parse_bicomplex("2.5j - 1e-3 i2 + i1").unwrap(),
            Bicomplex::new(0.0, 1.0, -1e-3, 2.5)
        );
        assert_eq!(parse_bicomplex("2 * j").unwrap(), Bicomplex::new(0.0, 0.0, 0.0, 2.0));
        assert_eq!(parse_bicomplex("1.5E+2 i1").unwrap(), Bicomplex::new(0.0, 150.0, 0.0, 0.0));
    }

    #[test]
    fn idempotent_form() {
        let x = parse_bicomplex("[1+0 i1 ; -1+0 i1]").unwrap();
        assert_eq!(x, Bicomplex::J);
        let y = parse_bicomplex("[ 2 + 1 i1 ; 0 ]").unwrap();
        assert_eq!(y.to_idempotent().0, Complex64::new(2.0, 1.0));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "1 + ", "1 2", "i3", "1 + 2 i1 + 3 i1", "[1 ; 2", "[1 ; 2 ; 3]", "[1 + 2 j ; 0]", "abc", "1e999", "1 + * j", "2 *"] {
            assert!(parse_bicomplex(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_cartesian(&Bicomplex::new(1.0, -2.0, 0.5, 0.0)), "1 - 2 i1 + 0.5 i2 + 0 j");
        assert_eq!(format_idempotent(&Bicomplex::J), "[1+0 i1 ; -1+0 i1]");
        assert_eq!(format_cartesian(&Bicomplex::new(1e-20, 0.0, 0.0, 0.0)), "1e-20 + 0 i1 + 0 i2 + 0 j");
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![
            -1e6..1e6f64,
            any::<f64>().prop_filter("finite", |x| x.is_finite()),
        ]
    }

    proptest! {
        #[test]
        fn cartesian_roundtrip_is_bit_exact(a in finite(), b in finite(), c in finite(), d in finite()) {
            let x = Bicomplex::new(a, b, c, d);
            let back = parse_bicomplex(&format_cartesian(&x)).unwrap();
            prop_assert_eq!(back.x0.to_bits(), a.to_bits());
            prop_assert_eq!(back.x1.to_bits(), b.to_bits());
            prop_assert_eq!(back.x2.to_bits(), c.to_bits());
            prop_assert_eq!(back.x3.to_bits(), d.to_bits());
        }

        #[test]
        fn idempotent_roundtrip_preserves_components(a in -1e3..1e3f64, b in -1e3..1e3f64, c in -1e3..1e3f64, d in -1e3..1e3f64) {
            let x = Bicomplex::new(a, b, c, d);
            let back = parse_bicomplex(&format_idempotent(&x)).unwrap();
            let tol = 4.0 * f64::EPSILON * x.norm().max(f64::MIN_POSITIVE);
            prop_assert!((back - x).norm() <= tol);
        }
    }
}
