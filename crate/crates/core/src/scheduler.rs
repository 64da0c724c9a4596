//! Round-robin schedules from rainbow near-perfect matchings.
//!
//! A rainbow near-perfect matching `M` of `K•_{n-1}` (odd `n - 1`) plus a hub
//! team `n - 1` gives a 1-factorization of `K_n`: round `i` is `rot(M, i)`
//! with the hub playing the one vertex `rot(M, i)` leaves open. Rainbow-ness
//! makes the `n - 1` rotations of each color class cover that class exactly
//! once.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Matching, Vertex};

/// The single vertex a near-perfect matching leaves uncovered.
pub fn unmatched_vertex(m: &Matching) -> Result<Vertex> {
    let open = m.uncovered();
    match open.as_slice() {
        [v] => Ok(*v),
        _ => Err(Error::NotNearPerfect {
            uncovered: open.len(),
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Rotations of `M` itself.
    Direct,
    /// Rotations of `rev(M)`.
    Reversed,
}

/// `teams - 1` rounds of unordered games. Rounds are 0-indexed here and
/// 1-indexed in every external format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub teams: usize,
    pub rounds: Vec<Vec<Edge>>,
}

pub fn schedule_from_rpm(m: &Matching, variant: Variant) -> Result<Schedule> {
    let order = m.n();
    if order.is_multiple_of(2) {
        return Err(Error::Parity {
            what: "scheduling from a near-perfect matching",
            expected: "odd",
            n: order,
        });
    }
    m.require_rpm()?;
    let teams = order + 1;
    let hub = order;
    let (seed, open) = match variant {
        Variant::Direct => (m.clone(), unmatched_vertex(m)?),
        Variant::Reversed => {
            let rev = m.reverse();
            let open = unmatched_vertex(&rev)?;
            (rev, open)
        }
    };

    let rounds = (0..order)
        .map(|i| {
            let mut games = seed.rotate(i as i64).edges().to_vec();
            games.push(Edge::ordered((open + i) % order, hub));
            games.sort_unstable();
            games
        })
        .collect();
    Ok(Schedule { teams, rounds })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Team count is odd or below two.
    TeamCount {
        teams: usize,
    },
    RoundCount {
        expected: usize,
        found: usize,
    },
    TeamOutOfRange {
        round: usize,
        team: Vertex,
    },
    /// A team plays more than once in one round.
    TeamRepeated {
        round: usize,
        team: Vertex,
    },
    /// A team has no game in a round.
    TeamIdle {
        round: usize,
        team: Vertex,
    },
    /// A pair meets again in `round` after first meeting in `first_round`.
    PairRepeated {
        pair: Edge,
        first_round: usize,
        round: usize,
    },
    PairMissing {
        pair: Edge,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Rounds print 1-indexed.
        match self {
            Violation::TeamCount { teams } => {
                write!(f, "{teams} teams: need an even count of at least 2")
            }
            Violation::RoundCount { expected, found } => {
                write!(f, "{found} rounds, expected {expected}")
            }
            Violation::TeamOutOfRange { round, team } => {
                write!(f, "round {}: team {team} out of range", round + 1)
            }
            Violation::TeamRepeated { round, team } => {
                write!(f, "round {}: team {team} plays twice", round + 1)
            }
            Violation::TeamIdle { round, team } => {
                write!(f, "round {}: team {team} does not play", round + 1)
            }
            Violation::PairRepeated {
                pair,
                first_round,
                round,
            } => write!(
                f,
                "round {}: pair {pair} already met in round {}",
                round + 1,
                first_round + 1
            ),
            Violation::PairMissing { pair } => write!(f, "pair {pair} never meets"),
        }
    }
}

/// Every way `s` breaks the round-robin constraints; empty when it is a
/// 1-factorization of `K_teams`.
pub fn validate_schedule(s: &Schedule) -> Vec<Violation> {
    let n = s.teams;
    let mut out = Vec::new();
    if n < 2 || n % 2 == 1 {
        out.push(Violation::TeamCount { teams: n });
    }
    if s.rounds.len() != n.saturating_sub(1) {
        out.push(Violation::RoundCount {
            expected: n.saturating_sub(1),
            found: s.rounds.len(),
        });
    }

    let mut met: HashMap<Edge, usize> = HashMap::new();
    for (round, games) in s.rounds.iter().enumerate() {
        let mut plays = vec![0usize; n];
        for &game in games {
            for team in [game.u(), game.v()] {
                if team >= n {
                    out.push(Violation::TeamOutOfRange { round, team });
                } else {
                    plays[team] += 1;
                }
            }
            if game.v() >= n {
                continue;
            }
            if let Some(&first_round) = met.get(&game) {
                out.push(Violation::PairRepeated {
                    pair: game,
                    first_round,
                    round,
                });
            } else {
                met.insert(game, round);
            }
        }
        for (team, &count) in plays.iter().enumerate() {
            match count {
                0 => out.push(Violation::TeamIdle { round, team }),
                1 => {}
                _ => out.push(Violation::TeamRepeated { round, team }),
            }
        }
    }

    for a in 0..n {
        for b in a + 1..n {
            let pair = Edge::ordered(a, b);
            if !met.contains_key(&pair) {
                out.push(Violation::PairMissing { pair });
            }
        }
    }
    out
}

impl Schedule {
    /// `round,team_a,team_b` rows, rounds counted from 1.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["round", "team_a", "team_b"])
            .expect("writing to memory");
        for (i, games) in self.rounds.iter().enumerate() {
            for g in games {
                w.serialize((i + 1, g.u(), g.v()))
                    .expect("writing to memory");
            }
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv is utf-8")
    }
}
