use std::fmt;

/// A failure together with the exit status it maps to.
#[derive(Debug)]
pub enum Fail {
    /// Bad or missing flags (exit 1).
    Usage(String),
    /// Unreadable file or malformed value (exit 2).
    Parse(String),
    /// Syndrome outside the decoding table (exit 3).
    Uncorrectable(String),
    /// Arguments that parse but violate a constructor's requirements (exit 4).
    Constraint(String),
}

pub type Outcome<T> = Result<T, Fail>;

impl Fail {
    pub fn exit_code(&self) -> u8 {
        match self {
            Fail::Usage(_) => 1,
            Fail::Parse(_) => 2,
            Fail::Uncorrectable(_) => 3,
            Fail::Constraint(_) => 4,
        }
    }
}

impl fmt::Display for Fail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fail::Usage(m) | Fail::Parse(m) | Fail::Constraint(m) => f.write_str(m),
            Fail::Uncorrectable(m) => write!(f, "uncorrectable: {m}"),
        }
    }
}

impl From<algcode::Error> for Fail {
    fn from(e: algcode::Error) -> Self {
        match e {
            algcode::Error::Parse(_) => Fail::Parse(e.to_string()),
            algcode::Error::Uncorrectable(_) => Fail::Uncorrectable(e.to_string()),
            other => Fail::Constraint(other.to_string()),
        }
    }
}
