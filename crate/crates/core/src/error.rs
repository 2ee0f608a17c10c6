use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("no monomials of degree {degree} in zero variables")]
    EmptyDomain { degree: u32 },
    #[error("monomials over {left} and {right} variables cannot be compared")]
    DimensionMismatch { left: usize, right: usize },
}

/// A violated constraint on the polynomial `f = sum_r x_r^d1 g_r`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("d1 must be at least 1")]
    ZeroXDegree,
    #[error("at least one u-variable is required")]
    NoVariables,
    #[error("at least one term is required")]
    NoFacets,
    #[error("g{index} has {found} exponents, expected m = {expected}")]
    WrongVariableCount {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("g{index} has degree {found}, expected the common degree {expected}")]
    MixedUDegree {
        index: usize,
        expected: u32,
        found: u32,
    },
    #[error("u-degree d2 = {d2} is below the minimum 2")]
    UDegreeTooSmall { d2: u32 },
    #[error("g{first} and g{second} are the same monomial")]
    DuplicateFacet { first: usize, second: usize },
    #[error("{count} distinct monomials cannot fit in {bound} monomials of degree {d2}")]
    TooManyFacets { count: usize, bound: u128, d2: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("facet index {index} out of range (there are {count} facets)")]
    FacetIndex { index: usize, count: usize },
    #[error("pair ({index}, {index}) is not a pair of distinct facets")]
    InvalidPair { index: usize },
    #[error("bidegree ({i}, {j}) outside 0..={d1} x 0..={d2}")]
    Bidegree { i: u32, j: u32, d1: u32, d2: u32 },
    #[error("degree {degree} outside 0..={top}")]
    Degree { degree: u32, top: u32 },
    #[error("point has {found} coordinates, expected {expected}")]
    PointDimension { expected: usize, found: usize },
    #[error("linear form has {found} coefficients, expected {expected}")]
    FormDimension { expected: usize, found: usize },
    #[error("linear form is zero")]
    ZeroForm,
    #[error("Hessian order {k} too large: 2k must not exceed {top}")]
    HessianOrder { k: u32, top: u32 },
    #[error("at least one trial is required")]
    NoTrials,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
