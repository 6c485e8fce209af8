//! The built-in Sustainable Development Goals vocabulary.
//!
//! Each goal's keywords are the words of its title followed by the thesaurus
//! synonyms chosen for it. `G0` holds overarching terms; there is no `G13`.

use alloc::vec::Vec;

use super::{Topic, TopicModel};

/// Provenance notes carried into the exported vocabulary file.
pub const SDG_MODEL_NOTES: &[&str] = &[
    "Keywords per goal: title keywords followed by thesaurus synonyms.",
    "G0 collects overarching terms. G13 (climate action) has no keyword set; add it with a custom vocabulary if needed.",
    "Spelling corrected from the source table: 'feminismm' -> 'feminism', 'maldutrition' -> 'malnutrition'.",
    "Synonyms repeating a title keyword within the same goal ('hunger' in G2, 'health' in G3) are listed once.",
    "147 keyword phrases in total; the source study reports 131 words and sequences of words.",
];

const TABLE: &[(&str, &str, &[&str])] = &[
    (
        "G0",
        "Overarching terms",
        &[
            "Sustainability",
            "Sustainable Development Goal",
            "SDG",
            "Agenda 2030",
        ],
    ),
    (
        "G1",
        "Poverty",
        &[
            "Poverty",
            "pennilessness",
            "distress",
            "necessity",
            "hardship",
            "insolvency",
            "privation",
            "penury",
            "destitution",
            "hand-to-mouth existence",
            "beggary",
            "indigence",
            "pauperism",
            "necessitousness",
        ],
    ),
    (
        "G2",
        "Hunger",
        &[
            "Hunger",
            "undernutrition",
            "malnutrition",
            "starvation",
            "famine",
            "undernourishment",
            "food",
        ],
    ),
    (
        "G3",
        "Health, Well-being",
        &[
            "Health",
            "Well-being",
            "wellbeing",
            "welfare",
            "interest",
            "benefit",
            "advantage",
            "comfort",
            "happiness",
            "prosperity",
        ],
    ),
    (
        "G4",
        "Education",
        &[
            "Education",
            "teaching",
            "schooling",
            "training",
            "development",
            "coaching",
            "instruction",
            "tutoring",
            "tuition",
            "indoctrination",
        ],
    ),
    (
        "G5",
        "Gender",
        &[
            "Gender",
            "feminism",
            "sexism",
            "women\u{2019}s movement",
            "suffragette",
            "suffragist",
            "feminist",
            "sexist",
            "emancipated",
        ],
    ),
    (
        "G6",
        "Water, Sanitation",
        &[
            "Water",
            "Sanitation",
            "hygiene",
            "cleanliness",
            "sewerage",
            "drinking water",
        ],
    ),
    ("G7", "Clean Energy", &["Clean Energy", "green energy"]),
    (
        "G8",
        "Decent Work, Economic Growth",
        &[
            "Decent Work",
            "Economic Growth",
            "financial",
            "business",
            "trade",
            "industrial",
            "commercial",
            "mercantile",
        ],
    ),
    (
        "G9",
        "Industry, Innovation, Infrastructure",
        &[
            "Industry",
            "Innovation",
            "Infrastructure",
            "technological innovations",
        ],
    ),
    (
        "G10",
        "Inequality",
        &[
            "Inequality",
            "apartheid",
            "linguistic imperialism",
            "favouritism",
            "bias",
            "partiality",
            "injustice",
            "imbalance",
            "nepotism",
        ],
    ),
    (
        "G11",
        "Sustainable Cities, Sustainable Communities",
        &[
            "Sustainable Cities",
            "Sustainable Communities",
            "Smart cities",
            "society",
            "people",
            "public",
            "association",
            "population",
            "residents",
            "commonwealth",
            "general public",
            "populace",
            "body politic",
            "state",
        ],
    ),
    (
        "G12",
        "Responsible Consumption, Responsible Production",
        &[
            "Responsible Consumption",
            "Responsible Production",
            "using up",
            "waste",
            "expenditure",
            "exhaustion",
            "depletion",
            "utilization",
            "dissipation",
            "manufacture",
            "manufacturing",
            "construction",
            "assembly",
            "fabrication",
        ],
    ),
    (
        "G14",
        "Life Below Water",
        &["Life Below Water", "biology", "marine biology"],
    ),
    ("G15", "Life on Land", &["Life on Land", "agriculture"]),
    (
        "G16",
        "Peace, Justice, Strong Institutions",
        &[
            "Peace",
            "Justice",
            "Strong Institutions",
            "truce",
            "ceasefire",
            "treaty",
            "armistice",
            "pacification",
            "conciliation",
            "cessation of hostilities",
            "fairness",
            "equity",
            "integrity",
            "honesty",
            "decency",
            "impartiality",
            "rectitude",
            "reasonableness",
            "uprightness",
            "justness",
            "rightfulness",
        ],
    ),
    (
        "G17",
        "Partnerships, sustainable development",
        &[
            "Partnerships",
            "sustainable development",
            "cooperation",
            "association",
            "alliance",
            "sharing",
            "union",
            "connection",
            "participation",
            "copartnership",
        ],
    ),
];

/// The built-in SDG topic model: 17 topics, `G0`..`G12` and `G14`..`G17`.
pub fn default_sdg_model() -> TopicModel {
    let topics: Vec<Topic> = TABLE
        .iter()
        .map(|(id, name, keywords)| {
            Topic::new(*id, *name, keywords.iter().copied()).expect("built-in topic is valid")
        })
        .collect();
    TopicModel::new(topics).expect("built-in model is valid")
}
