use serde::{Deserialize, Serialize};

/// Three-valued answer for checks that may only be approximable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails(String),
    Inconclusive(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    /// Conjunction: the first failure wins, then the first inconclusive.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fails(w), _) | (_, Verdict::Fails(w)) => Verdict::Fails(w),
            (Verdict::Inconclusive(w), _) | (_, Verdict::Inconclusive(w)) => Verdict::Inconclusive(w),
            _ => Verdict::Holds,
        }
    }

    pub fn all(items: impl IntoIterator<Item = Verdict>) -> Verdict {
        items.into_iter().fold(Verdict::Holds, Verdict::and)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serialized_shape() {
        assert_eq!(serde_json::to_string(&Verdict::Holds).unwrap(), r#"{"verdict":"holds"}"#);
        assert_eq!(
            serde_json::to_string(&Verdict::Fails("H_1".into())).unwrap(),
            r#"{"verdict":"fails","witness":"H_1"}"#
        );
        let v: Verdict = serde_json::from_str(r#"{"verdict":"inconclusive","witness":"cap"}"#).unwrap();
        assert_eq!(v, Verdict::Inconclusive("cap".into()));
    }

    #[test]
    fn conjunction() {
        let v = Verdict::all([Verdict::Holds, Verdict::Inconclusive("a".into()), Verdict::Fails("b".into())]);
        assert_eq!(v, Verdict::Fails("b".into()));
        assert!(Verdict::all([]).holds());
    }
}
