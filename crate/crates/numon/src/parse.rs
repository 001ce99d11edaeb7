use std::ops::RangeInclusive;

/// Inclusive range written `a..b`, `a..=b`, or a single value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<u64>);

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad number {t:?}: {e}"));
        let range = match s.split_once("..") {
            None => {
                let v = num(s)?;
                v..=v
            }
            Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        };
        if range.is_empty() {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span(range))
    }
}

impl Span {
    pub fn iter(&self) -> RangeInclusive<u64> {
        self.0.clone()
    }
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.start() == self.0.end() {
            write!(f, "{}", self.0.start())
        } else {
            write!(f, "{}..{}", self.0.start(), self.0.end())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("3..10".parse::<Span>().unwrap(), Span(3..=10));
        assert_eq!("3..=10".parse::<Span>().unwrap(), Span(3..=10));
        assert_eq!("7".parse::<Span>().unwrap(), Span(7..=7));
        assert!("9..3".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
    }
}
