//! Normalized subdomain probability fields on a refined 1-D grid.
//!
//! A [`DomainField`] stores `J` subdomain probability channels sampled at
//! `(N-1)*R + 1` grid nodes, `R` nodes per unit sample spacing, and evaluates
//! them continuously on the extent `[0, N-1]` (sample-index units) by
//! piecewise-linear interpolation. Normalization makes the channels sum to
//! one at every node, and linear interpolation preserves that sum between
//! nodes, so the field is a partition of unity over the whole extent.

use crate::error::{Error, Result};

/// Snap tolerance for grid-node hits, in node units (`x * R`). Coordinates
/// this close to a node evaluate exactly at the node, which keeps positions
/// reconstructed through floating-point division (e.g. `j / factor`) on the
/// node lattice.
pub(crate) const NODE_SNAP: f64 = 1e-9;

/// `J` normalized subdomain probability channels on a refined 1-D grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainField {
    refinement: usize,
    num_samples: usize,
    channels: Vec<Vec<f64>>,
}

impl DomainField {
    /// Build a field from raw (un-normalized) indicator channels.
    ///
    /// Each channel must have the same length `L >= 2` with `L - 1` divisible
    /// by `refinement`, all values non-negative and finite, and at every node
    /// the cross-channel sum must be strictly positive. Each node value is
    /// divided by the cross-channel sum at that node.
    pub fn normalize(raw_channels: Vec<Vec<f64>>, refinement: usize) -> Result<Self> {
        let mut channels = Self::validate_shape(raw_channels, refinement)?;
        let nodes = channels[0].len();
        for node in 0..nodes {
            let sum: f64 = channels.iter().map(|c| c[node]).sum();
            if sum <= 0.0 {
                return Err(Error::ZeroCoverage { node });
            }
            for channel in channels.iter_mut() {
                channel[node] /= sum;
            }
        }
        Ok(Self {
            refinement,
            num_samples: (nodes - 1) / refinement + 1,
            channels,
        })
    }

    /// Build a field from channels that are already normalized, e.g. a line
    /// extracted from a 2-D field. Node sums must be within `1e-6` of one;
    /// values are stored as given, without re-normalization.
    pub fn from_normalized(channels: Vec<Vec<f64>>, refinement: usize) -> Result<Self> {
        let channels = Self::validate_shape(channels, refinement)?;
        let nodes = channels[0].len();
        for node in 0..nodes {
            let sum: f64 = channels.iter().map(|c| c[node]).sum();
            if (sum - 1.0).abs() > 1e-6 {
                return Err(Error::InvalidConfig {
                    what: "channels passed to from_normalized must sum to 1 at every node",
                });
            }
        }
        Ok(Self {
            refinement,
            num_samples: (nodes - 1) / refinement + 1,
            channels,
        })
    }

    fn validate_shape(channels: Vec<Vec<f64>>, refinement: usize) -> Result<Vec<Vec<f64>>> {
        if refinement == 0 {
            return Err(Error::InvalidConfig {
                what: "refinement must be >= 1",
            });
        }
        if channels.is_empty() {
            return Err(Error::InvalidConfig {
                what: "at least one subdomain channel is required",
            });
        }
        let nodes = channels[0].len();
        for channel in &channels {
            if channel.len() != nodes {
                return Err(Error::ShapeMismatch {
                    what: "channel length",
                    expected: nodes,
                    found: channel.len(),
                });
            }
        }
        if nodes < 2 {
            return Err(Error::ShapeMismatch {
                what: "channel length",
                expected: 2,
                found: nodes,
            });
        }
        if (nodes - 1) % refinement != 0 {
            return Err(Error::ShapeMismatch {
                what: "channel length minus one (must be a multiple of the refinement)",
                expected: refinement,
                found: nodes - 1,
            });
        }
        for (j, channel) in channels.iter().enumerate() {
            for (i, &v) in channel.iter().enumerate() {
                if !v.is_finite() || v < 0.0 {
                    let _ = j;
                    return Err(Error::NonFinite {
                        what: "subdomain channel",
                        index: i,
                    });
                }
            }
        }
        Ok(channels)
    }

    /// Number of subdomains `J`.
    pub fn num_subdomains(&self) -> usize {
        self.channels.len()
    }

    /// Grid nodes per unit sample spacing.
    pub fn refinement(&self) -> usize {
        self.refinement
    }

    /// Number of sample positions `N` covered by the extent `[0, N-1]`.
    pub fn num_samples(&self) -> usize {
        self.num_samples
    }

    /// Upper end of the extent, `N - 1`.
    pub fn max_coord(&self) -> f64 {
        (self.num_samples - 1) as f64
    }

    /// Whether `x` lies in the extent `[0, N-1]`.
    pub fn contains(&self, x: f64) -> bool {
        x >= 0.0 && x <= self.max_coord()
    }

    /// Stored node values of one channel.
    pub fn channel_nodes(&self, channel: usize) -> &[f64] {
        &self.channels[channel]
    }

    /// Evaluate normalized subdomain probability `d_channel(x)` by linear
    /// interpolation between the two bracketing grid nodes. Exact at node
    /// coordinates.
    pub fn eval(&self, channel: usize, x: f64) -> Result<f64> {
        if !self.contains(x) {
            return Err(Error::OutOfExtent {
                x,
                max: self.max_coord(),
            });
        }
        let nodes = &self.channels[channel];
        let t = x * self.refinement as f64;
        let nearest = t.round();
        if (t - nearest).abs() <= NODE_SNAP {
            return Ok(nodes[nearest as usize]);
        }
        let i = t.floor() as usize;
        let frac = t - i as f64;
        Ok(nodes[i] + frac * (nodes[i + 1] - nodes[i]))
    }

    /// All channel probabilities at `x`, in channel order.
    pub fn eval_all(&self, x: f64) -> Result<Vec<f64>> {
        (0..self.num_subdomains()).map(|j| self.eval(j, x)).collect()
    }

    /// Index set of maximal association at `x`: every channel whose
    /// probability is within `tie_tol` of the maximum.
    pub fn maximal_set(&self, x: f64, tie_tol: f64) -> Result<IndexSet> {
        let values = self.eval_all(x)?;
        let best = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Ok(IndexSet::from_predicate(&values, |v| v >= best - tie_tol))
    }

    /// Index set of minimal association at `x`: every channel whose
    /// probability is within `tie_tol` of the minimum.
    pub fn minimal_set(&self, x: f64, tie_tol: f64) -> Result<IndexSet> {
        let values = self.eval_all(x)?;
        let worst = values.iter().cloned().fold(f64::INFINITY, f64::min);
        Ok(IndexSet::from_predicate(&values, |v| v <= worst + tie_tol))
    }
}

/// A non-empty set of subdomain channel indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    members: Vec<usize>,
}

impl IndexSet {
    fn from_predicate(values: &[f64], keep: impl Fn(f64) -> bool) -> Self {
        let members = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| keep(v))
            .map(|(j, _)| j)
            .collect::<Vec<_>>();
        debug_assert!(!members.is_empty());
        Self { members }
    }

    /// Members in increasing channel order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.members.binary_search(&j).is_ok()
    }

    /// The single member if the set is a singleton.
    pub fn singleton(&self) -> Option<usize> {
        match self.members[..] {
            [only] => Some(only),
            _ => None,
        }
    }

    /// Smallest member; used as the deterministic representative when any
    /// member would do.
    pub fn smallest(&self) -> usize {
        self.members[0]
    }
}
