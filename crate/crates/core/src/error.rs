use crate::geometry::ContainmentReport;

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// An argument is outside its admissible range.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A domain failed structural validation (self-intersection, bad slit, ...).
    #[error("domain validation failed: {0}")]
    Validation(String),

    /// A bound was requested for a domain that is not contained in the wedge.
    #[error("containment violated{}", containment_detail(.0))]
    Containment(ContainmentReport),

    /// An iteration failed to converge or a root could not be bracketed.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Mesh generation failed.
    #[error("mesh generation failed: {0}")]
    Mesh(String),
}

fn containment_detail(report: &ContainmentReport) -> String {
    match report.violation {
        Some(p) => format!(" near ({:.6}, {:.6})", p.x, p.y),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
