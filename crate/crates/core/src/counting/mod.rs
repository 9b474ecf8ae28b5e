//! Exact message counts `N_c`, `N_q`, `N_a`: Burnside/Pólya sums over explicit
//! groups, closed forms for cyclic, dihedral and symmetric groups, cycle-index
//! evaluation, and leading asymptotics.

mod asymptotic;
mod cycle_index;
mod formulas;

use std::fmt;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use crate::perm_core::{partitions, Partition};
pub use asymptotic::{
    asymptotic_estimate, exact_count, exact_to_asymptotic_ratio, AsymptoticEstimate, AsymptoticLaw,
};
pub use cycle_index::{
    alternating_substitution, binomial, cycle_index_of_group, cycle_index_symmetric,
    series_coefficient_nq,
};
pub use formulas::{
    count_ancilla_polya, count_classical_burnside, count_cyclic, count_dihedral, count_group,
    count_group_bounded, count_named, count_quantum_totally_orthogonal, count_symmetric,
    QuantumStrategy,
};

/// Which route produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Burnside,
    PolyaAncilla,
    TotallyOrthogonal,
    CyclicClosedForm,
    DihedralClosedForm,
    SymmetricClosedForm,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Burnside => "burnside",
            Method::PolyaAncilla => "polya_ancilla",
            Method::TotallyOrthogonal => "totally_orthogonal",
            Method::CyclicClosedForm => "cyclic_closed_form",
            Method::DihedralClosedForm => "dihedral_closed_form",
            Method::SymmetricClosedForm => "symmetric_closed_form",
            Method::Oracle => "oracle",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Count {
    pub value: BigUint,
    pub method: Method,
}

impl Count {
    pub fn new(value: BigUint, method: Method) -> Self {
        Count { value, method }
    }
}

/// Big integers serialize as decimal strings.
impl Serialize for Count {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Count", 2)?;
        s.serialize_field("value", &self.value.to_string())?;
        s.serialize_field("method", &self.method)?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "N_c")]
    pub classical: Count,
    #[serde(rename = "N_q")]
    pub quantum: Option<Count>,
    #[serde(rename = "N_a")]
    pub ancilla: Count,
    /// Why `N_q` is missing, when it is.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantum_note: Option<String>,
}

impl CountReport {
    pub fn quantum_defined(&self) -> bool {
        self.quantum.is_some()
    }

    /// `N_c ≤ N_q ≤ N_a`, `N_q ≤ d^n` and `N_a ≤ d^{2n}`, skipping an undefined `N_q`.
    pub fn satisfies_hierarchy(&self) -> bool {
        let dn = BigUint::from(self.d).pow(self.n as u32);
        let bounds = self.classical.value <= self.ancilla.value && self.ancilla.value <= &dn * &dn;
        match &self.quantum {
            Some(q) => {
                bounds
                    && self.classical.value <= q.value
                    && q.value <= self.ancilla.value
                    && q.value <= dn
            }
            None => bounds,
        }
    }

    /// `N_c < N_q < N_a`.
    pub fn strictly_ordered(&self) -> bool {
        match &self.quantum {
            Some(q) => self.classical.value < q.value && q.value < self.ancilla.value,
            None => false,
        }
    }
}
