use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShaclError {
    #[error("unsupported SHACL feature: {0}")]
    UnsupportedFeature(String),

    #[error("malformed shape `{shape}`: {message}")]
    MalformedShape { shape: String, message: String },
}

impl ShaclError {
    pub fn malformed(shape: impl std::fmt::Display, message: impl Into<String>) -> Self {
        ShaclError::MalformedShape {
            shape: shape.to_string(),
            message: message.into(),
        }
    }
}
