use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in Z[ζ₅]")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("element is divisible by λ = 1 − ζ")]
    DivisibleByLambda,

    #[error("λ-adic precision {0} is outside the supported range 1..=8")]
    LambdaPrecision(u32),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} ≡ 4 (mod 5) splits into two primes of degree 2, which is not supported")]
    UnsupportedPrime(u64),

    #[error("no unit u = ±ζ^a(1+ζ)^t with |t| ≤ {bound} puts the associate into the target residues mod λ^{power} (impossible for every unit: {impossible})")]
    AssociateNotFound {
        power: u32,
        bound: i32,
        impossible: bool,
    },

    #[error("prime is not split over Z[ζ₅]; the residue symbol is only evaluated at split primes")]
    NonSplitPrime,

    #[error("the prime divides the argument, so the residue symbol is undefined")]
    SymbolUndefined,

    #[error("argument must be nonzero")]
    ZeroArgument,

    #[error("radicand must be greater than 1, got {0}")]
    RadicandTooSmall(u64),

    #[error("{n} is not 5th-power-free ({prime}^{exponent} divides it)")]
    NotFifthPowerFree { n: u64, prime: u64, exponent: u32 },

    #[error("{0} has a cofactor beyond the trial-division bound")]
    FactorizationBound(u64),

    #[error("radicand {0} matches none of the three admissible forms")]
    NoMatch(u64),

    #[error("h₁ is required for radicands of the form p^e·q and 5^e·p")]
    MissingH1,

    #[error("h₁ must lie in 1..=4, got {0}")]
    InvalidH1(u8),

    #[error("no exponent h₁ ∈ 1..=4 and unit make u·π₁·w^h₁ ≡ ±1, ±7 (mod λ⁵): {reason}")]
    H1NotFound { reason: String },

    #[error("the two generator words are projectively dependent")]
    DependentGenerators,

    #[error("class word {0} is not in the span of the class group generators")]
    NotInClassGroup(String),

    #[error("fixture file: {0}")]
    Fixture(String),

    #[error("CAS adapter failed for n = {n}: {reason}")]
    CasProcess { n: u64, reason: String },

    #[error("CAS adapter timed out after {millis} ms for n = {n}")]
    CasTimeout { n: u64, millis: u64 },

    #[error("CAS adapter protocol error for n = {n}: {reason}")]
    CasProtocol { n: u64, reason: String },

    #[error("invalid range {lo}..={hi}: need 1 < lo ≤ hi")]
    InvalidRange { lo: u64, hi: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
