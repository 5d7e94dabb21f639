//! Parsers for operator expressions and Schur-basis literals.
//!
//! The grammar mirrors the `Display` implementations in the core crate, so
//! `parse(print(x)) == x` for every value either parser can produce.
//!
//! ```text
//! expr    := dot ('+' dot)*
//! dot     := factor ('.' factor)*
//! factor  := scalar '*' factor | atom
//! atom    := 'S[' int ']' | 'St[' int ']' | 'H[' int ']' | 'Hcol[' uint ']'
//!          | 'R{' uint ':{' uint,* '}}'
//!          | 'hat(' expr ')' | 'omegaConj(' expr ')'
//!          | 'perp(' symfunc ')' | 'mul(' symfunc ')'
//!          | 'id' | '(' expr ')'
//! scalar  := uint | 'q' | 'q^' uint | '(' poly ')'
//! symfunc := '0' | ['-'] term (('+'|'-') term)*
//! term    := [coeff '*'] 's[' uint,* ']'
//! coeff   := uint ['*' qpow] | qpow | '(' poly ')'
//! poly    := ['-'] pterm (('+'|'-') pterm)*
//! pterm   := uint ['*' qpow] | qpow
//! qpow    := 'q' ['^' uint]
//! ```
//!
//! Whitespace may appear between any two tokens.  Composition `.` binds
//! tighter than `+`, and a scalar prefix binds tightest of all; `A . B`
//! applies `B` first.

use ribbonfn_core::num_bigint::BigInt;

use ribbonfn_core::ops::{self, HcolMode, LinearOp};
use ribbonfn_core::{Partition, QPoly, Ribbon, SymFunc};

/// A rejected input: either malformed text (with the byte offset of the
/// first offending position) or well-formed text denoting something the
/// algebra refuses (a non-partition index, mismatched operator sum, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax { offset: usize, message: String },
    Semantic { message: String },
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Syntax { offset, message } => {
                write!(f, "{message} at byte offset {offset}")
            }
            ParseError::Semantic { message } => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for ParseError {}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { offset, message: message.into() }
}

fn semantic(message: impl Into<String>) -> ParseError {
    ParseError::Semantic { message: message.into() }
}

/// Parses an operator expression into a ready-to-apply [`LinearOp`].
pub fn parse_expr(text: &str) -> Result<LinearOp, ParseError> {
    let mut s = Scanner::new(text);
    let op = s.expr()?;
    s.finish()?;
    Ok(op)
}

/// Parses a Schur-basis symmetric function literal.
pub fn parse_symfunc(text: &str) -> Result<SymFunc, ParseError> {
    let mut s = Scanner::new(text);
    let f = s.symfunc()?;
    s.finish()?;
    Ok(f)
}

/// Parses a bare partition given as comma-separated parts, e.g. `2,2,1`.
/// The empty string is the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition, ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in trimmed.split(',') {
        let piece = piece.trim();
        let part: u32 = piece
            .parse()
            .map_err(|_| semantic(format!("invalid partition part {piece:?}")))?;
        parts.push(part);
    }
    Partition::new(parts).map_err(|e| semantic(e.to_string()))
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(syntax(self.pos_after_ws(), format!("expected {:?}", b as char)))
        }
    }

    /// Position with leading whitespace skipped, for error reporting.
    fn pos_after_ws(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    /// Consumes `word` if it appears here and is not followed by an
    /// identifier character (so `id` does not match a prefix of `idx`).
    fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let bytes = word.as_bytes();
        if self.src[self.pos..].starts_with(bytes) {
            let after = self.src.get(self.pos + bytes.len()).copied();
            if !matches!(after, Some(c) if c.is_ascii_alphanumeric()) {
                self.pos += bytes.len();
                return true;
            }
        }
        false
    }

    /// Consumes `prefix` literally (used for heads like `S[` where the
    /// following character is punctuation already).
    fn eat_prefix(&mut self, prefix: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(prefix.as_bytes()) {
            self.pos += prefix.len();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        let start = self.pos_after_ws();
        let mut end = start;
        while end < self.src.len() && self.src[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return Err(syntax(start, "expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..end]).expect("ascii digits");
        self.pos = end;
        digits
            .parse()
            .map_err(|_| syntax(start, "number too large"))
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat(b'-');
        let magnitude = self.uint()? as i64;
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        let at = self.pos_after_ws();
        if at != self.src.len() {
            return Err(syntax(at, "unexpected trailing input"));
        }
        Ok(())
    }

    // ---- operator grammar ----

    fn expr(&mut self) -> Result<LinearOp, ParseError> {
        let mut acc = self.dot()?;
        while self.eat(b'+') {
            let rhs = self.dot()?;
            acc = ops::add(&acc, &rhs).map_err(|e| semantic(e.to_string()))?;
        }
        Ok(acc)
    }

    fn dot(&mut self) -> Result<LinearOp, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'.') {
            let rhs = self.factor()?;
            // `A . B` applies B first; compose keeps that order.
            acc = ops::compose(&acc, &rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LinearOp, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'q' => {
                let scalar = self.scalar_monomial()?;
                self.expect(b'*')?;
                let inner = self.factor()?;
                Ok(ops::scale(&scalar, &inner))
            }
            Some(b'(') => {
                // Either `(poly) * factor` or a parenthesised expression;
                // try the scalar reading first and back off on failure.
                let save = self.pos;
                if let Ok(scalar) = self.paren_poly() {
                    if self.eat(b'*') {
                        let inner = self.factor()?;
                        return Ok(ops::scale(&scalar, &inner));
                    }
                }
                self.pos = save;
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<LinearOp, ParseError> {
        if self.eat_prefix("St[") {
            let m = self.int()?;
            self.expect(b']')?;
            return Ok(ops::bernstein_col(m));
        }
        if self.eat_prefix("S[") {
            let m = self.int()?;
            self.expect(b']')?;
            return Ok(ops::bernstein_row(m));
        }
        if self.eat_prefix("Hcol[") {
            let at = self.pos_after_ws();
            let k = self.uint()?;
            self.expect(b']')?;
            let k = u32::try_from(k).map_err(|_| syntax(at, "column size too large"))?;
            return Ok(ops::hcol(k, HcolMode::Sum));
        }
        if self.eat_prefix("H[") {
            let m = self.int()?;
            self.expect(b']')?;
            return Ok(ops::jing_row(m));
        }
        if self.eat_prefix("R{") {
            return self.ribbon();
        }
        if self.eat_word("hat") {
            self.expect(b'(')?;
            let inner = self.expr()?;
            self.expect(b')')?;
            return Ok(ops::hat(&inner));
        }
        if self.eat_word("omegaConj") {
            self.expect(b'(')?;
            let inner = self.expr()?;
            self.expect(b')')?;
            return Ok(ops::omega_conj(&inner));
        }
        if self.eat_word("perp") {
            self.expect(b'(')?;
            let f = self.symfunc()?;
            self.expect(b')')?;
            return ops::perp_by(&f).map_err(|e| semantic(e.to_string()));
        }
        if self.eat_word("mul") {
            self.expect(b'(')?;
            let f = self.symfunc()?;
            self.expect(b')')?;
            return ops::mul_by(&f).map_err(|e| semantic(e.to_string()));
        }
        if self.eat_word("id") {
            return Ok(ops::identity());
        }
        Err(syntax(self.pos_after_ws(), "expected an operator"))
    }

    fn ribbon(&mut self) -> Result<LinearOp, ParseError> {
        // `R{` is already consumed: parse `size:{d1,d2,...}}`.
        let at = self.pos_after_ws();
        let size = self.uint()?;
        let size = u32::try_from(size).map_err(|_| syntax(at, "ribbon size too large"))?;
        self.expect(b':')?;
        self.expect(b'{')?;
        let mut descents = Vec::new();
        if self.peek() != Some(b'}') {
            loop {
                let at = self.pos_after_ws();
                let d = self.uint()?;
                descents
                    .push(u32::try_from(d).map_err(|_| syntax(at, "descent out of range"))?);
                if !self.eat(b',') {
                    break;
                }
            }
        }
        self.expect(b'}')?;
        self.expect(b'}')?;
        let ribbon =
            Ribbon::new(size, &descents).map_err(|e| semantic(e.to_string()))?;
        Ok(ops::ribbon_op(&ribbon))
    }

    // ---- scalar / polynomial grammar ----

    /// A standalone scalar: a non-negative integer or a power of `q`.
    fn scalar_monomial(&mut self) -> Result<QPoly, ParseError> {
        if self.eat_word("q") {
            return self.qpow_tail(BigInt::from(1));
        }
        let n = self.uint()?;
        Ok(QPoly::constant(BigInt::from(n)))
    }

    /// The exponent part after a leading `q`, yielding `c*q^e`.
    fn qpow_tail(&mut self, c: BigInt) -> Result<QPoly, ParseError> {
        let e = if self.eat(b'^') {
            let at = self.pos_after_ws();
            u32::try_from(self.uint()?).map_err(|_| syntax(at, "exponent too large"))?
        } else {
            1
        };
        Ok(QPoly::monomial(c, e))
    }

    fn paren_poly(&mut self) -> Result<QPoly, ParseError> {
        self.expect(b'(')?;
        let p = self.poly()?;
        self.expect(b')')?;
        Ok(p)
    }

    fn poly(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = QPoly::zero();
        let mut negative = self.eat(b'-');
        loop {
            let term = self.poly_term(negative)?;
            acc += &term;
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_term(&mut self, negative: bool) -> Result<QPoly, ParseError> {
        let sign = if negative { BigInt::from(-1) } else { BigInt::from(1) };
        if self.eat_word("q") {
            return self.qpow_tail(sign);
        }
        let n = BigInt::from(self.uint()?) * &sign;
        let save = self.pos;
        if self.eat(b'*') && self.eat_word("q") {
            return self.qpow_tail(n);
        }
        self.pos = save;
        Ok(QPoly::constant(n))
    }

    // ---- symmetric function literals ----

    fn symfunc(&mut self) -> Result<SymFunc, ParseError> {
        // A lone `0` denotes the zero function; it cannot start a sum.
        let save = self.pos;
        if self.eat(b'0') {
            let next = self.peek();
            if !matches!(next, Some(c) if c.is_ascii_digit()) {
                return Ok(SymFunc::zero());
            }
            self.pos = save;
        }
        let mut acc = SymFunc::zero();
        let mut negative = self.eat(b'-');
        loop {
            let term = self.symfunc_term(negative)?;
            acc += &term;
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn symfunc_term(&mut self, negative: bool) -> Result<SymFunc, ParseError> {
        let coeff = match self.peek() {
            Some(b'(') => {
                let c = self.paren_poly()?;
                self.expect(b'*')?;
                c
            }
            Some(c) if c.is_ascii_digit() || c == b'q' => {
                let c = self.poly_term(false)?;
                self.expect(b'*')?;
                c
            }
            _ => QPoly::one(),
        };
        let coeff = if negative { -&coeff } else { coeff };
        let lam = self.schur_index()?;
        Ok(SymFunc::schur_term(lam, coeff))
    }

    fn schur_index(&mut self) -> Result<Partition, ParseError> {
        if !self.eat_prefix("s[") {
            return Err(syntax(self.pos_after_ws(), "expected s[...]"));
        }
        let mut parts = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                let at = self.pos_after_ws();
                let part = self.uint()?;
                parts.push(u32::try_from(part).map_err(|_| syntax(at, "part too large"))?);
                if !self.eat(b',') {
                    break;
                }
            }
        }
        self.expect(b']')?;
        Partition::new(parts).map_err(|e| semantic(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(text: &str) -> SymFunc {
        parse_symfunc(text).unwrap()
    }

    #[test]
    fn symfunc_round_trips() {
        for text in [
            "0",
            "s[]",
            "s[1]",
            "s[3,2,1]",
            "-s[2,2]",
            "s[1,1,1] + (q + q^2)*s[2,1] + q^3*s[3]",
            "(-1 + q)*s[1,1]",
            "2*q^3*s[3] - s[1]",
            "3*s[2]",
        ] {
            let f = sf(text);
            assert_eq!(sf(&f.to_string()), f, "round trip of {text:?}");
        }
    }

    #[test]
    fn symfunc_is_whitespace_insensitive() {
        assert_eq!(sf(" s[2,1]+q*s[3] "), sf("s[2,1] + q*s[3]"));
    }

    #[test]
    fn symfunc_rejects_bad_input() {
        match parse_symfunc("s[1").unwrap_err() {
            ParseError::Syntax { offset, .. } => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_symfunc("s[1,2]").unwrap_err(),
            ParseError::Semantic { .. }
        ));
        assert!(parse_symfunc("s[1] s[2]").is_err());
    }

    #[test]
    fn expr_round_trips_display() {
        for text in [
            "id",
            "S[1]",
            "St[-1]",
            "H[2]",
            "Hcol[3]",
            "R{3:{1,2}}",
            "R{4:{}}",
            "hat(R{3:{1,2}} . S[1])",
            "omegaConj(S[2])",
            "perp(s[1,1])",
            "mul(s[2]) . perp(s[1,1])",
            "q^2*(Hcol[2] . St[1])",
            "(q + q^2)*S[1]",
            "(-1)*S[2]",
            "S[2] + (-1)*S[2]",
            "(S[1] + S[1]) . St[0]",
            "3*H[1]",
        ] {
            let op = parse_expr(text).unwrap();
            assert_eq!(op.to_string(), text, "canonical form of {text:?}");
            let reparsed = parse_expr(&op.to_string()).unwrap();
            assert_eq!(reparsed.to_string(), op.to_string());
        }
    }

    #[test]
    fn expr_precedence() {
        // `.` binds tighter than `+`: S[2] + S[1] . S[1] parses as
        // S[2] + (S[1] . S[1]); both branches shift degree by two.  The
        // other grouping would be rejected for mismatched shifts.
        let op = parse_expr("S[2] + S[1] . S[1]").unwrap();
        assert_eq!(op.degree_shift(), 2);
        // Scalars bind tightest: q*S[1] . St[0] scales only S[1].
        let op = parse_expr("q*S[1] . St[0]").unwrap();
        assert_eq!(op.to_string(), "q*S[1] . St[0]");
    }

    #[test]
    fn expr_reports_offsets() {
        match parse_expr("S[1").unwrap_err() {
            ParseError::Syntax { offset, .. } => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_expr("S[1] ! S[2]").unwrap_err() {
            ParseError::Syntax { offset, .. } => assert_eq!(offset, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        // Adding operators of different degree shift is well-formed text
        // but semantically rejected.
        assert!(matches!(
            parse_expr("S[1] + S[2]").unwrap_err(),
            ParseError::Semantic { .. }
        ));
        // An invalid ribbon descent set is likewise semantic.
        assert!(matches!(
            parse_expr("R{3:{7}}").unwrap_err(),
            ParseError::Semantic { .. }
        ));
    }

    #[test]
    fn parsed_operators_evaluate() {
        let op = parse_expr("H[1] . H[1]").unwrap();
        let got = op.apply(&SymFunc::one());
        assert_eq!(got, sf("s[1,1] + q*s[2]"));
        let op = parse_expr("hat(S[1])").unwrap();
        assert_eq!(op.apply(&sf("s[1]")), sf("s[2]"));
    }

    #[test]
    fn partition_literals() {
        assert_eq!(parse_partition("2,2,1").unwrap().parts(), &[2, 2, 1]);
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert_eq!(parse_partition(" 3 , 1 ").unwrap().parts(), &[3, 1]);
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("a").is_err());
    }
}
