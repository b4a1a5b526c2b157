use std::collections::BTreeMap;

use super::BridgeError;
use crate::geometry::{ball_mereo, Ball, MereoKind, Scene, Solid};
use crate::model::{functor_den, Functor, Mereology, NameDen, MAX_INDIVIDUALS};

/// Balls and labeled solids of a scene, ordered by geometric parthood.
///
/// Individuals are the balls in scene order followed by the solids. A ball is
/// below a solid when it is part of a single constituent, a solid is below a
/// ball when every constituent is, and solids compare constituent-wise.
#[derive(Clone, Debug)]
pub struct SceneUniverse {
    balls: Vec<Ball>,
    solids: Vec<Solid>,
    below: Vec<NameDen>,
    constants: BTreeMap<String, NameDen>,
}

const RESERVED: [&str; 4] = ["balls", "solids", "empty", "u"];

fn part_of(a: &Ball, b: &Ball) -> bool {
    ball_mereo(MereoKind::PartOf, a, b).expect("uniform dimension")
}

pub fn scene_to_universe(balls: &[Ball], solids: &[Solid]) -> Result<SceneUniverse, BridgeError> {
    let scene = Scene::new(balls.first().map_or(1, Ball::dim), balls.to_vec(), solids.to_vec())?;
    SceneUniverse::from_scene(&scene)
}

impl SceneUniverse {
    pub fn from_scene(scene: &Scene) -> Result<SceneUniverse, BridgeError> {
        let n = scene.balls.len() + scene.solids.len();
        if n > MAX_INDIVIDUALS {
            return Err(BridgeError::TooManyIndividuals(n));
        }
        if let Some(label) = scene
            .balls
            .iter()
            .map(|b| &b.label)
            .chain(scene.solids.iter().map(|s| &s.label))
            .find(|l| RESERVED.contains(&l.as_str()))
        {
            return Err(BridgeError::ReservedLabel(label.clone()));
        }
        let mut u = SceneUniverse {
            balls: scene.balls.clone(),
            solids: scene.solids.clone(),
            below: Vec::new(),
            constants: BTreeMap::new(),
        };
        u.below = (0..n).map(|j| (0..n).filter(|&i| u.order(i, j)).collect()).collect();

        let balls: NameDen = (0..u.balls.len()).collect();
        u.constants.insert("empty".into(), NameDen::EMPTY);
        u.constants.insert("u".into(), NameDen::full(n));
        u.constants.insert("balls".into(), balls);
        for i in 0..n {
            u.constants.insert(u.individual_label(i), NameDen::singleton(i));
        }
        // A is a solid iff some individual B in coll(balls) has A in subcoll(B).
        let mut solids = NameDen::EMPTY;
        for b in functor_den(&u, Functor::Coll, &[balls])?.members() {
            solids = solids.union(functor_den(&u, Functor::Subcoll, &[NameDen::singleton(b)])?);
        }
        u.constants.insert("solids".into(), solids);
        Ok(u)
    }

    fn constituents(&self, i: usize) -> &[Ball] {
        if i < self.balls.len() {
            std::slice::from_ref(&self.balls[i])
        } else {
            &self.solids[i - self.balls.len()].parts
        }
    }

    fn order(&self, i: usize, j: usize) -> bool {
        let (a, b) = (self.constituents(i), self.constituents(j));
        a.iter().all(|x| b.iter().any(|y| part_of(x, y)))
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn solids(&self) -> &[Solid] {
        &self.solids
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.balls
            .iter()
            .position(|b| b.label == label)
            .or_else(|| self.solids.iter().position(|s| s.label == label).map(|i| i + self.balls.len()))
    }

    pub fn ball(&self, label: &str) -> Result<&Ball, BridgeError> {
        self.balls.iter().find(|b| b.label == label).ok_or_else(|| BridgeError::UnknownLabel(label.to_string()))
    }

    /// A labeled solid, or a ball as a one-part solid.
    pub fn solid(&self, label: &str) -> Result<Solid, BridgeError> {
        match self.solids.iter().find(|s| s.label == label) {
            Some(s) => Ok(s.clone()),
            None => self.ball(label).map(|b| Solid::from(b.clone())),
        }
    }

    pub fn dim(&self) -> usize {
        self.balls.first().map_or(1, Ball::dim)
    }
}

impl Mereology for SceneUniverse {
    fn individual_count(&self) -> usize {
        self.below.len()
    }

    fn below(&self, i: usize) -> NameDen {
        self.below[i]
    }

    fn constant(&self, name: &str) -> Option<NameDen> {
        self.constants.get(name).copied()
    }

    fn constant_names(&self) -> Vec<String> {
        self.constants.keys().cloned().collect()
    }

    fn individual_label(&self, i: usize) -> String {
        if i < self.balls.len() {
            self.balls[i].label.clone()
        } else {
            self.solids[i - self.balls.len()].label.clone()
        }
    }
}
