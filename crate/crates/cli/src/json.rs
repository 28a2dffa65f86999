//! JSON shapes for cycles, circuits, decompositions and merge traces.

use std::collections::BTreeMap;

use outerbound::{
    validate_circuit, validate_cycle, BoundaryDecomposition, Cell, Circuit, Corner, Cycle,
    CycleTree, MergeReport, MergeTrace, PathError, SpliceSide, TreeEdge,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleJson {
    pub corners: Vec<[i32; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitJson {
    pub corners: Vec<[i32; 2]>,
    pub circuit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub edges: Vec<(usize, usize, [i32; 2])>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub cycles: Vec<CycleJson>,
    pub tree: TreeJson,
    pub circuit: CircuitJson,
    pub cell_to_cycle: Vec<[i64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideJson {
    FirstSegment,
    SecondSegment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterationJson {
    pub attachment: [i32; 2],
    pub exterior_path: Vec<[i32; 2]>,
    pub chosen_side: SideJson,
    pub cycle_after: CycleJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyJson {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeJson {
    pub result: CycleJson,
    pub trace: Vec<IterationJson>,
    pub invariants: Vec<PropertyJson>,
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error(transparent)]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("{0}")]
    Shape(String),
}

fn pair(c: Corner) -> [i32; 2] {
    [c.a, c.b]
}

fn corners(list: &[[i32; 2]]) -> Vec<Corner> {
    list.iter().map(|&[a, b]| Corner::new(a, b)).collect()
}

impl From<&Cycle> for CycleJson {
    fn from(c: &Cycle) -> Self {
        Self {
            corners: c.corners().iter().copied().map(pair).collect(),
        }
    }
}

impl CycleJson {
    pub fn to_cycle(&self) -> Result<Cycle, PathError> {
        validate_cycle(&corners(&self.corners))
    }
}

impl From<&Circuit> for CircuitJson {
    fn from(c: &Circuit) -> Self {
        Self {
            corners: c.corners().iter().copied().map(pair).collect(),
            circuit: true,
        }
    }
}

impl From<&BoundaryDecomposition> for DecompositionJson {
    fn from(d: &BoundaryDecomposition) -> Self {
        Self {
            cycles: d.cycles.iter().map(CycleJson::from).collect(),
            tree: TreeJson {
                edges: d
                    .tree
                    .edges()
                    .iter()
                    .map(|e| (e.a, e.b, pair(e.corner)))
                    .collect(),
            },
            circuit: CircuitJson::from(&d.circuit),
            cell_to_cycle: d
                .cell_to_cycle
                .iter()
                .map(|(c, &i)| [c.x as i64, c.y as i64, i as i64])
                .collect(),
        }
    }
}

impl DecompositionJson {
    pub fn to_decomposition(&self) -> Result<BoundaryDecomposition, JsonError> {
        let cycles = self
            .cycles
            .iter()
            .map(CycleJson::to_cycle)
            .collect::<Result<Vec<_>, _>>()?;
        let n = cycles.len();
        let mut tree_edges = Vec::with_capacity(self.tree.edges.len());
        for &(a, b, [ca, cb]) in &self.tree.edges {
            if a >= n || b >= n {
                return Err(JsonError::Shape(format!(
                    "tree edge ({a}, {b}) names a missing cycle"
                )));
            }
            tree_edges.push(TreeEdge {
                a,
                b,
                corner: Corner::new(ca, cb),
            });
        }
        let circuit = if self.circuit.corners.is_empty() {
            BoundaryDecomposition::default().circuit
        } else {
            validate_circuit(&corners(&self.circuit.corners))?
        };
        let mut cell_to_cycle = BTreeMap::new();
        for &[x, y, i] in &self.cell_to_cycle {
            let cell = Cell::new(
                i32::try_from(x).map_err(|_| JsonError::Shape(format!("x = {x} out of range")))?,
                i32::try_from(y).map_err(|_| JsonError::Shape(format!("y = {y} out of range")))?,
            );
            let index = usize::try_from(i)
                .ok()
                .filter(|&i| i < n)
                .ok_or_else(|| JsonError::Shape(format!("cell {cell} names missing cycle {i}")))?;
            cell_to_cycle.insert(cell, index);
        }
        Ok(BoundaryDecomposition {
            cycles,
            cell_to_cycle,
            tree: CycleTree::from_edges(n, tree_edges),
            circuit,
        })
    }
}

pub fn merge_json(result: &Cycle, trace: &MergeTrace, report: &MergeReport) -> MergeJson {
    MergeJson {
        result: result.into(),
        trace: trace
            .iterations
            .iter()
            .map(|it| IterationJson {
                attachment: pair(it.attachment),
                exterior_path: it.exterior_path.iter().copied().map(pair).collect(),
                chosen_side: match it.chosen_side {
                    SpliceSide::FirstSegment => SideJson::FirstSegment,
                    SpliceSide::SecondSegment => SideJson::SecondSegment,
                },
                cycle_after: (&it.cycle_after).into(),
            })
            .collect(),
        invariants: report
            .checks
            .iter()
            .map(|c| PropertyJson {
                name: c.name.to_string(),
                passed: c.passed,
            })
            .collect(),
    }
}

pub fn parse_cycle(text: &str) -> Result<Cycle, JsonError> {
    let raw: CycleJson = serde_json::from_str(text)?;
    Ok(raw.to_cycle()?)
}

pub fn parse_decomposition(text: &str) -> Result<BoundaryDecomposition, JsonError> {
    let raw: DecompositionJson = serde_json::from_str(text)?;
    raw.to_decomposition()
}
