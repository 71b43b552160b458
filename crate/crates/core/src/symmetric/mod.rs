//! Symmetric sequences and symmetric spectra (placeholder while building).
