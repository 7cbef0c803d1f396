use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder, Polynomial, RingError, VarContext};

/// Byte cursor shared by the polynomial and order-spec parsers.
pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), RingError> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    pub fn keyword(&mut self, k: &str) -> Result<(), RingError> {
        let save = self.pos;
        match self.identifier() {
            Some(w) if w == k => Ok(()),
            _ => {
                self.pos = save;
                Err(self.error(&format!("expected `{k}`")))
            }
        }
    }

    pub fn identifier(&mut self) -> Option<&'a str> {
        let rest = self.rest();
        let mut end = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 { c.is_ascii_alphabetic() || c == '_' } else { c.is_ascii_alphanumeric() || c == '_' };
            if !ok {
                break;
            }
            end = i + c.len_utf8();
        }
        if end == 0 {
            return None;
        }
        self.pos += end;
        Some(&rest[..end])
    }

    pub fn digits(&mut self) -> Option<&'a str> {
        let rest = self.rest();
        let end = rest.bytes().take_while(|b| b.is_ascii_digit()).count();
        if end == 0 {
            return None;
        }
        self.pos += end;
        Some(&rest[..end])
    }

    pub fn integer(&mut self) -> Option<i64> {
        let save = self.pos;
        let neg = self.eat('-');
        match self.digits().and_then(|d| d.parse::<i64>().ok()) {
            Some(v) => Some(if neg { -v } else { v }),
            None => {
                self.pos = save;
                None
            }
        }
    }

    pub fn error(&self, msg: &str) -> RingError {
        RingError::Syntax { pos: self.pos, msg: msg.to_string() }
    }
}

/// Parse `signed sum of terms`, where a term is `[rational "*"] var ["^" nat] ("*" var ["^" nat])*`
/// or a bare rational.
pub fn parse_polynomial(text: &str, ctx: &VarContext, order: &MonomialOrder) -> Result<Polynomial, RingError> {
    if order.nvars() != ctx.len() {
        return Err(RingError::ContextMismatch);
    }
    let mut cur = Cursor::new(text);
    let mut terms = Vec::new();
    cur.skip_ws();
    if cur.at_end() {
        return Err(cur.error("empty polynomial"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.at_end() {
            if first {
                return Err(cur.error("expected a term"));
            }
            break;
        }
        let mut negative = false;
        if cur.eat('-') {
            negative = true;
        } else if cur.eat('+') {
        } else if !first {
            return Err(cur.error("expected `+` or `-`"));
        }
        cur.skip_ws();
        let (c, m) = parse_term(&mut cur, ctx)?;
        terms.push((if negative { -c } else { c }, m));
        first = false;
    }
    Ok(Polynomial::from_terms(terms, order))
}

pub fn parse_monomial(text: &str, ctx: &VarContext) -> Result<Monomial, RingError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let (c, m) = parse_term(&mut cur, ctx)?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(cur.error("trailing input after monomial"));
    }
    if !c.is_one() {
        return Err(RingError::Syntax { pos: 0, msg: "monomial must have coefficient 1".into() });
    }
    Ok(m)
}

fn parse_term(cur: &mut Cursor, ctx: &VarContext) -> Result<(BigRational, Monomial), RingError> {
    let mut exps = vec![0u32; ctx.len()];
    let mut coeff = BigRational::one();
    let mut need_factor = true;
    if let Some(num) = cur.digits() {
        let num: BigInt = num.parse().expect("digits");
        let den = if cur.eat('/') {
            let d = cur.digits().ok_or_else(|| cur.error("expected a denominator"))?;
            let d: BigInt = d.parse().expect("digits");
            if d.is_zero() {
                return Err(cur.error("zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        coeff = BigRational::new(num, den);
        cur.skip_ws();
        if !cur.eat('*') {
            return Ok((coeff, Monomial::from_exps(exps)));
        }
    }
    while need_factor {
        cur.skip_ws();
        let start = cur.pos();
        let name = cur.identifier().ok_or_else(|| cur.error("expected a variable"))?;
        let v = ctx.index_of(name).ok_or(RingError::UnknownVariableAt { name: name.to_string(), pos: start })?;
        cur.skip_ws();
        let mut e = 1u32;
        if cur.eat('^') {
            cur.skip_ws();
            let d = cur.digits().ok_or_else(|| cur.error("expected an exponent"))?;
            e = d.parse().map_err(|_| cur.error("exponent too large"))?;
        }
        exps[v] = exps[v].checked_add(e).ok_or(RingError::ExponentOverflow)?;
        cur.skip_ws();
        need_factor = cur.eat('*');
    }
    Ok((coeff, Monomial::from_exps(exps)))
}
