//! Verification suites (placeholder while building).
