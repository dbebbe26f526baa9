#pragma once

// Generated from catalog/shapebench_catalog.json; the catalog test keeps the
// two in sync. Regenerate with `shapebench catalog export --header`.

namespace shapebench::detail {

inline constexpr const char kEmbeddedCatalog[] = R"SBCAT({
 "catalog_version": "shapebench-catalog/1.0.0",
 "tasks": [
  {
   "id": "airfoil_sp",
   "environment": "airfoil",
   "category": "continuous",
   "description": "2D CST airfoil, penalized lift-to-drag at one operating point",
   "space": [
    {
     "name": "u1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "l1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "p_le",
     "kind": "continuous",
     "lower": -0.5,
     "upper": 0.5,
     "unit": ""
    },
    {
     "name": "t_te",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 0.01,
     "unit": ""
    }
   ],
   "points": [
    {
     "alpha": 5.0,
     "reynolds": 10000000.0,
     "mach": 0.2,
     "weight": 1.0
    }
   ],
   "geometry": {
    "type": "cst_airfoil",
    "upper": [
     "u1",
     "u2",
     "u3",
     "u4",
     "u5",
     "u6",
     "u7",
     "u8"
    ],
    "lower": [
     "l1",
     "l2",
     "l3",
     "l4",
     "l5",
     "l6",
     "l7",
     "l8"
    ],
    "leading_edge": "p_le",
    "te_thickness": "t_te"
   },
   "objectives": [
    {
     "name": "L/D",
     "expr": "CL / CD",
     "aggregate": "single",
     "sense": "maximize"
    }
   ],
   "constraints": [
    {
     "name": "thickness_positive",
     "kind": "inequality",
     "expr": "t_min",
     "op": ">=",
     "bound": 0.0,
     "scale": 0.01
    },
    {
     "name": "thickness_033",
     "kind": "inequality",
     "expr": "t_033",
     "op": ">=",
     "bound": 0.128,
     "scale": 0.128
    },
    {
     "name": "thickness_090",
     "kind": "inequality",
     "expr": "t_090",
     "op": ">=",
     "bound": 0.014,
     "scale": 0.014
    },
    {
     "name": "te_wedge_angle",
     "kind": "inequality",
     "expr": "te_wedge",
     "op": ">=",
     "bound": 6.03,
     "scale": 6.03
    },
    {
     "name": "le_angle",
     "kind": "equality",
     "expr": "le_angle",
     "target": 180.0,
     "scale": 1.0
    },
    {
     "name": "wiggliness",
     "kind": "inequality",
     "expr": "wiggliness / wiggliness_ref",
     "op": "<=",
     "bound": 2.0,
     "scale": 2.0
    },
    {
     "name": "cm",
     "kind": "inequality",
     "expr": "CM",
     "op": ">=",
     "bound": -0.133,
     "scale": 0.067
    },
    {
     "name": "confidence",
     "kind": "inequality",
     "expr": "confidence",
     "op": ">=",
     "bound": 0.9,
     "scale": 0.05
    }
   ],
   "penalty_weight": 500.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 101,
    "fields": [
     {
      "name": "CL",
      "lo": 0.3,
      "hi": 1.5,
      "alpha_slope": 0.1,
      "alpha_ref": 5.0
     },
     {
      "name": "CD",
      "lo": 0.004,
      "hi": 0.02,
      "alpha_quad": 0.0001,
      "alpha_ref": 4.0
     },
     {
      "name": "CM",
      "lo": -0.2,
      "hi": 0.0
     }
    ]
   }
  },
  {
   "id": "airfoil_mp",
   "environment": "airfoil",
   "category": "continuous",
   "description": "2D CST airfoil, weighted mean drag over six lift targets",
   "space": [
    {
     "name": "u1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "u8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "l1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "l8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "p_le",
     "kind": "continuous",
     "lower": -0.5,
     "upper": 0.5,
     "unit": ""
    },
    {
     "name": "t_te",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 0.01,
     "unit": ""
    }
   ],
   "points": [
    {
     "cl_target": 0.8,
     "mach": 0.03,
     "weight": 5
    },
    {
     "cl_target": 1.0,
     "mach": 0.03,
     "weight": 6
    },
    {
     "cl_target": 1.2,
     "mach": 0.03,
     "weight": 7
    },
    {
     "cl_target": 1.4,
     "mach": 0.03,
     "weight": 8
    },
    {
     "cl_target": 1.5,
     "mach": 0.03,
     "weight": 9
    },
    {
     "cl_target": 1.6,
     "mach": 0.03,
     "weight": 10
    }
   ],
   "alpha_solve": {
    "cl_metric": "CL",
    "lo": -5.0,
    "hi": 15.0,
    "iters": 10
   },
   "reynolds_schedule": true,
   "geometry": {
    "type": "cst_airfoil",
    "upper": [
     "u1",
     "u2",
     "u3",
     "u4",
     "u5",
     "u6",
     "u7",
     "u8"
    ],
    "lower": [
     "l1",
     "l2",
     "l3",
     "l4",
     "l5",
     "l6",
     "l7",
     "l8"
    ],
    "leading_edge": "p_le",
    "te_thickness": "t_te"
   },
   "objectives": [
    {
     "name": "CD_mean",
     "expr": "CD",
     "aggregate": "weighted_mean",
     "sense": "minimize"
    }
   ],
   "constraints": [
    {
     "name": "thickness_positive",
     "kind": "inequality",
     "expr": "t_min",
     "op": ">=",
     "bound": 0.0,
     "scale": 0.01
    },
    {
     "name": "thickness_033",
     "kind": "inequality",
     "expr": "t_033",
     "op": ">=",
     "bound": 0.128,
     "scale": 0.128
    },
    {
     "name": "thickness_090",
     "kind": "inequality",
     "expr": "t_090",
     "op": ">=",
     "bound": 0.014,
     "scale": 0.014
    },
    {
     "name": "te_wedge_angle",
     "kind": "inequality",
     "expr": "te_wedge",
     "op": ">=",
     "bound": 6.03,
     "scale": 6.03
    },
    {
     "name": "le_angle",
     "kind": "equality",
     "expr": "le_angle",
     "target": 180.0,
     "scale": 1.0
    },
    {
     "name": "wiggliness",
     "kind": "inequality",
     "expr": "wiggliness / wiggliness_ref",
     "op": "<=",
     "bound": 2.0,
     "scale": 2.0
    },
    {
     "name": "cm",
     "kind": "inequality",
     "expr": "CM",
     "op": ">=",
     "bound": -0.133,
     "scale": 0.067,
     "per_point": true
    },
    {
     "name": "confidence",
     "kind": "inequality",
     "expr": "confidence",
     "op": ">=",
     "bound": 0.9,
     "scale": 0.05,
     "per_point": true
    },
    {
     "name": "alpha_monotonicity",
     "kind": "inequality",
     "expr": "alpha_monotone_gap",
     "op": "<=",
     "bound": 0.0,
     "scale": 1.0
    },
    {
     "name": "cl_reachability",
     "kind": "inequality",
     "expr": "bracketed",
     "op": ">=",
     "bound": 1.0,
     "scale": 1.0,
     "per_point": true
    }
   ],
   "penalty_weight": 500.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 102,
    "fields": [
     {
      "name": "CL",
      "lo": 0.0,
      "hi": 0.6,
      "alpha_slope": 0.1,
      "alpha_gain": 0.4
     },
     {
      "name": "CD",
      "lo": 0.005,
      "hi": 0.012,
      "alpha_quad": 5e-05,
      "alpha_ref": 2.0,
      "re_exponent": -0.2,
      "re_ref": 500000.0
     },
     {
      "name": "CM",
      "lo": -0.18,
      "hi": -0.02
     }
    ]
   }
  },
  {
   "id": "delta_wing_sp",
   "environment": "delta_wing",
   "category": "continuous",
   "description": "Delta wing, lift-to-drag at one operating point",
   "space": [
    {
     "name": "sweep_le",
     "kind": "continuous",
     "lower": 55.0,
     "upper": 75.0,
     "unit": "deg"
    },
    {
     "name": "root_airfoil",
     "kind": "categorical",
     "levels": [
      "NACA0010",
      "NACA0016",
      "NACA0024",
      "NACA2416",
      "NACA4416"
     ],
     "unit": ""
    }
   ],
   "points": [
    {
     "alpha": 10.0,
     "mach": 0.42,
     "reynolds": 8900000.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "L/D",
     "expr": "CL / CD",
     "aggregate": "single",
     "sense": "maximize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 201,
    "fields": [
     {
      "name": "CL",
      "lo": 0.2,
      "hi": 0.6,
      "alpha_slope": 0.04,
      "alpha_gain": 0.5,
      "alpha_ref": 10.0,
      "mach_slope": 0.2,
      "mach_ref": 0.42
     },
     {
      "name": "CD",
      "lo": 0.02,
      "hi": 0.08,
      "alpha_quad": 0.0004,
      "mach_slope": 0.05,
      "mach_ref": 0.42
     },
     {
      "name": "CM",
      "lo": -0.1,
      "hi": 0.05,
      "alpha_slope": -0.004,
      "alpha_gain": 0.8,
      "alpha_ref": 10.0
     }
    ]
   }
  },
  {
   "id": "delta_wing_mp_mission",
   "environment": "delta_wing",
   "category": "continuous",
   "description": "Delta wing, weighted-sum mission lift-to-drag over three points",
   "space": [
    {
     "name": "sweep_le",
     "kind": "discrete",
     "levels": [
      55.0,
      65.0,
      75.0
     ],
     "unit": "deg"
    },
    {
     "name": "root_airfoil",
     "kind": "categorical",
     "levels": [
      "NACA0010",
      "NACA0016",
      "NACA0024",
      "NACA2416",
      "NACA4416"
     ],
     "unit": ""
    }
   ],
   "points": [
    {
     "alpha": 5.0,
     "mach": 0.35,
     "reynolds": 6500000.0,
     "weight": 0.3
    },
    {
     "alpha": 10.0,
     "mach": 0.42,
     "reynolds": 8900000.0,
     "weight": 0.4
    },
    {
     "alpha": 15.0,
     "mach": 0.5,
     "reynolds": 10000000.0,
     "weight": 0.3
    }
   ],
   "objectives": [
    {
     "name": "L/D_mission",
     "expr": "CL / CD",
     "aggregate": "weighted_sum",
     "sense": "maximize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 202,
    "fields": [
     {
      "name": "CL",
      "lo": 0.2,
      "hi": 0.6,
      "alpha_slope": 0.04,
      "alpha_gain": 0.5,
      "alpha_ref": 10.0,
      "mach_slope": 0.2,
      "mach_ref": 0.42
     },
     {
      "name": "CD",
      "lo": 0.02,
      "hi": 0.08,
      "alpha_quad": 0.0004,
      "mach_slope": 0.05,
      "mach_ref": 0.42
     },
     {
      "name": "CM",
      "lo": -0.1,
      "hi": 0.05,
      "alpha_slope": -0.004,
      "alpha_gain": 0.8,
      "alpha_ref": 10.0
     }
    ]
   }
  },
  {
   "id": "delta_wing_mp_robust",
   "environment": "delta_wing",
   "category": "continuous",
   "description": "Delta wing, worst-case lift-to-drag over three points",
   "space": [
    {
     "name": "sweep_le",
     "kind": "discrete",
     "levels": [
      55.0,
      65.0,
      75.0
     ],
     "unit": "deg"
    },
    {
     "name": "root_airfoil",
     "kind": "categorical",
     "levels": [
      "NACA0010",
      "NACA0016",
      "NACA0024",
      "NACA2416",
      "NACA4416"
     ],
     "unit": ""
    }
   ],
   "points": [
    {
     "alpha": 5.0,
     "mach": 0.35,
     "reynolds": 6500000.0,
     "weight": 0.3
    },
    {
     "alpha": 10.0,
     "mach": 0.42,
     "reynolds": 8900000.0,
     "weight": 0.4
    },
    {
     "alpha": 15.0,
     "mach": 0.5,
     "reynolds": 10000000.0,
     "weight": 0.3
    }
   ],
   "objectives": [
    {
     "name": "L/D_worst",
     "expr": "CL / CD",
     "aggregate": "min",
     "sense": "maximize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 203,
    "fields": [
     {
      "name": "CL",
      "lo": 0.2,
      "hi": 0.6,
      "alpha_slope": 0.04,
      "alpha_gain": 0.5,
      "alpha_ref": 10.0,
      "mach_slope": 0.2,
      "mach_ref": 0.42
     },
     {
      "name": "CD",
      "lo": 0.02,
      "hi": 0.08,
      "alpha_quad": 0.0004,
      "mach_slope": 0.05,
      "mach_ref": 0.42
     },
     {
      "name": "CM",
      "lo": -0.1,
      "hi": 0.05,
      "alpha_slope": -0.004,
      "alpha_gain": 0.8,
      "alpha_ref": 10.0
     }
    ]
   }
  },
  {
   "id": "delta_wing_mo_a",
   "environment": "delta_wing",
   "category": "continuous",
   "description": "Delta wing, Pareto pair (-L/D, |CM|) at one point",
   "space": [
    {
     "name": "sweep_le",
     "kind": "continuous",
     "lower": 55.0,
     "upper": 75.0,
     "unit": "deg"
    },
    {
     "name": "root_airfoil",
     "kind": "categorical",
     "levels": [
      "NACA0010",
      "NACA0016",
      "NACA0024",
      "NACA2416",
      "NACA4416"
     ],
     "unit": ""
    }
   ],
   "points": [
    {
     "alpha": 10.0,
     "mach": 0.42,
     "reynolds": 8900000.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "neg_L/D",
     "expr": "-CL / CD",
     "aggregate": "single",
     "sense": "minimize",
     "weight": 1.0
    },
    {
     "name": "trim",
     "expr": "abs(CM)",
     "aggregate": "single",
     "sense": "minimize",
     "weight": 1.0
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 204,
    "fields": [
     {
      "name": "CL",
      "lo": 0.2,
      "hi": 0.6,
      "alpha_slope": 0.04,
      "alpha_gain": 0.5,
      "alpha_ref": 10.0,
      "mach_slope": 0.2,
      "mach_ref": 0.42
     },
     {
      "name": "CD",
      "lo": 0.02,
      "hi": 0.08,
      "alpha_quad": 0.0004,
      "mach_slope": 0.05,
      "mach_ref": 0.42
     },
     {
      "name": "CM",
      "lo": -0.1,
      "hi": 0.05,
      "alpha_slope": -0.004,
      "alpha_gain": 0.8,
      "alpha_ref": 10.0
     }
    ]
   }
  },
  {
   "id": "delta_wing_mo_b",
   "environment": "delta_wing",
   "category": "continuous",
   "description": "Delta wing, three mission objectives (-L/D, CD, |CM|)",
   "space": [
    {
     "name": "sweep_le",
     "kind": "continuous",
     "lower": 55.0,
     "upper": 75.0,
     "unit": "deg"
    },
    {
     "name": "root_airfoil",
     "kind": "categorical",
     "levels": [
      "NACA0010",
      "NACA0016",
      "NACA0024",
      "NACA2416",
      "NACA4416"
     ],
     "unit": ""
    }
   ],
   "points": [
    {
     "alpha": 5.0,
     "mach": 0.35,
     "reynolds": 6500000.0,
     "weight": 0.3
    },
    {
     "alpha": 10.0,
     "mach": 0.42,
     "reynolds": 8900000.0,
     "weight": 0.4
    },
    {
     "alpha": 15.0,
     "mach": 0.5,
     "reynolds": 10000000.0,
     "weight": 0.3
    }
   ],
   "objectives": [
    {
     "name": "neg_L/D",
     "expr": "-CL / CD",
     "aggregate": "weighted_sum",
     "sense": "minimize",
     "weight": 1.0
    },
    {
     "name": "CD",
     "expr": "CD",
     "aggregate": "weighted_sum",
     "sense": "minimize",
     "weight": 1.0
    },
    {
     "name": "trim",
     "expr": "abs(CM)",
     "aggregate": "weighted_sum",
     "sense": "minimize",
     "weight": 1.0
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 205,
    "fields": [
     {
      "name": "CL",
      "lo": 0.2,
      "hi": 0.6,
      "alpha_slope": 0.04,
      "alpha_gain": 0.5,
      "alpha_ref": 10.0,
      "mach_slope": 0.2,
      "mach_ref": 0.42
     },
     {
      "name": "CD",
      "lo": 0.02,
      "hi": 0.08,
      "alpha_quad": 0.0004,
      "mach_slope": 0.05,
      "mach_ref": 0.42
     },
     {
      "name": "CM",
      "lo": -0.1,
      "hi": 0.05,
      "alpha_slope": -0.004,
      "alpha_gain": 0.8,
      "alpha_ref": 10.0
     }
    ]
   }
  },
  {
   "id": "delta_wing_mo_kn",
   "environment": "delta_wing",
   "category": "continuous",
   "description": "Delta wing, static margin against weighted drag",
   "space": [
    {
     "name": "sweep_le",
     "kind": "continuous",
     "lower": 55.0,
     "upper": 75.0,
     "unit": "deg"
    },
    {
     "name": "root_airfoil",
     "kind": "categorical",
     "levels": [
      "NACA0010",
      "NACA0016",
      "NACA0024",
      "NACA2416",
      "NACA4416"
     ],
     "unit": ""
    }
   ],
   "points": [
    {
     "alpha": 10.0,
     "mach": 0.42,
     "reynolds": 8900000.0,
     "weight": 1.0
    }
   ],
   "static_margin": {
    "delta_alpha": 0.5,
    "cl_metric": "CL",
    "cm_metric": "CM",
    "output": "Kn"
   },
   "objectives": [
    {
     "name": "Kn",
     "expr": "Kn",
     "aggregate": "single",
     "sense": "maximize",
     "weight": 1.0
    },
    {
     "name": "neg_w_CD",
     "expr": "-10 * CD",
     "aggregate": "single",
     "sense": "maximize",
     "weight": 1.0
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 206,
    "fields": [
     {
      "name": "CL",
      "lo": 0.2,
      "hi": 0.6,
      "alpha_slope": 0.04,
      "alpha_gain": 0.5,
      "alpha_ref": 10.0,
      "mach_slope": 0.2,
      "mach_ref": 0.42
     },
     {
      "name": "CD",
      "lo": 0.02,
      "hi": 0.08,
      "alpha_quad": 0.0004,
      "mach_slope": 0.05,
      "mach_ref": 0.42
     },
     {
      "name": "CM",
      "lo": -0.1,
      "hi": 0.05,
      "alpha_slope": -0.004,
      "alpha_gain": 0.8,
      "alpha_ref": 10.0
     }
    ]
   }
  },
  {
   "id": "bwb_cfx",
   "environment": "bwb",
   "category": "continuous",
   "description": "Blended wing body, mean skin-friction proxy over five lift targets",
   "space": [
    {
     "name": "C2_C1",
     "kind": "continuous",
     "lower": 0.55,
     "upper": 0.85,
     "unit": ""
    },
    {
     "name": "C3_C1",
     "kind": "continuous",
     "lower": 0.18,
     "upper": 0.28,
     "unit": ""
    },
    {
     "name": "C4_C1",
     "kind": "continuous",
     "lower": 0.06,
     "upper": 0.09,
     "unit": ""
    },
    {
     "name": "B1_C1",
     "kind": "continuous",
     "lower": 0.1,
     "upper": 0.2,
     "unit": ""
    },
    {
     "name": "B2_C1",
     "kind": "continuous",
     "lower": 0.05,
     "upper": 0.2,
     "unit": ""
    },
    {
     "name": "B3_C1",
     "kind": "continuous",
     "lower": 0.2,
     "upper": 0.7,
     "unit": ""
    },
    {
     "name": "S1",
     "kind": "continuous",
     "lower": 40.0,
     "upper": 60.0,
     "unit": "deg"
    },
    {
     "name": "S2",
     "kind": "continuous",
     "lower": 40.0,
     "upper": 60.0,
     "unit": "deg"
    },
    {
     "name": "S3",
     "kind": "continuous",
     "lower": 24.0,
     "upper": 40.0,
     "unit": "deg"
    }
   ],
   "points": [
    {
     "cl_target": 0.185,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.206,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.206,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.206,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.227,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    }
   ],
   "alpha_solve": {
    "cl_metric": "CL",
    "lo": -5.0,
    "hi": 12.0,
    "iters": 8
   },
   "constraints": [
    {
     "name": "alpha_range",
     "kind": "box",
     "expr": "alpha",
     "lower": -3.0,
     "upper": 3.0,
     "scale": 2.0,
     "per_point": true
    },
    {
     "name": "cl_reachability",
     "kind": "inequality",
     "expr": "bracketed",
     "op": ">=",
     "bound": 1.0,
     "scale": 1.0,
     "per_point": true
    }
   ],
   "penalty_weight": 0.0,
   "objectives": [
    {
     "name": "Cfx_mean",
     "expr": "Cfx",
     "aggregate": "mean",
     "sense": "minimize"
    }
   ],
   "evaluator": {
    "type": "stand_in",
    "seed": 301,
    "fields": [
     {
      "name": "CL",
      "lo": 0.05,
      "hi": 0.25,
      "alpha_slope": 0.04,
      "alpha_gain": 0.3
     },
     {
      "name": "Cfx",
      "lo": 0.002,
      "hi": 0.004,
      "alpha_quad": 2e-05,
      "alpha_ref": 2.0
     },
     {
      "name": "Cp_level",
      "lo": 0.0,
      "hi": 0.02,
      "alpha_quad": 0.0005,
      "alpha_ref": 1.0
     }
    ],
    "panels": {
     "count": 200,
     "cp_metric": "Cp_level",
     "cfx_metric": "Cfx",
     "output": "CD_int"
    }
   }
  },
  {
   "id": "bwb_ld",
   "environment": "bwb",
   "category": "continuous",
   "description": "Blended wing body, mean lift-to-friction-proxy ratio",
   "space": [
    {
     "name": "C2_C1",
     "kind": "continuous",
     "lower": 0.55,
     "upper": 0.85,
     "unit": ""
    },
    {
     "name": "C3_C1",
     "kind": "continuous",
     "lower": 0.18,
     "upper": 0.28,
     "unit": ""
    },
    {
     "name": "C4_C1",
     "kind": "continuous",
     "lower": 0.06,
     "upper": 0.09,
     "unit": ""
    },
    {
     "name": "B1_C1",
     "kind": "continuous",
     "lower": 0.1,
     "upper": 0.2,
     "unit": ""
    },
    {
     "name": "B2_C1",
     "kind": "continuous",
     "lower": 0.05,
     "upper": 0.2,
     "unit": ""
    },
    {
     "name": "B3_C1",
     "kind": "continuous",
     "lower": 0.2,
     "upper": 0.7,
     "unit": ""
    },
    {
     "name": "S1",
     "kind": "continuous",
     "lower": 40.0,
     "upper": 60.0,
     "unit": "deg"
    },
    {
     "name": "S2",
     "kind": "continuous",
     "lower": 40.0,
     "upper": 60.0,
     "unit": "deg"
    },
    {
     "name": "S3",
     "kind": "continuous",
     "lower": 24.0,
     "upper": 40.0,
     "unit": "deg"
    }
   ],
   "points": [
    {
     "cl_target": 0.185,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.206,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.206,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.206,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.227,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    }
   ],
   "alpha_solve": {
    "cl_metric": "CL",
    "lo": -5.0,
    "hi": 12.0,
    "iters": 8
   },
   "constraints": [
    {
     "name": "alpha_range",
     "kind": "box",
     "expr": "alpha",
     "lower": -3.0,
     "upper": 3.0,
     "scale": 2.0,
     "per_point": true
    },
    {
     "name": "cl_reachability",
     "kind": "inequality",
     "expr": "bracketed",
     "op": ">=",
     "bound": 1.0,
     "scale": 1.0,
     "per_point": true
    }
   ],
   "penalty_weight": 0.0,
   "objectives": [
    {
     "name": "L/D_proxy",
     "expr": "cl_target / Cfx",
     "aggregate": "mean",
     "sense": "maximize"
    }
   ],
   "evaluator": {
    "type": "stand_in",
    "seed": 302,
    "fields": [
     {
      "name": "CL",
      "lo": 0.05,
      "hi": 0.25,
      "alpha_slope": 0.04,
      "alpha_gain": 0.3
     },
     {
      "name": "Cfx",
      "lo": 0.002,
      "hi": 0.004,
      "alpha_quad": 2e-05,
      "alpha_ref": 2.0
     },
     {
      "name": "Cp_level",
      "lo": 0.0,
      "hi": 0.02,
      "alpha_quad": 0.0005,
      "alpha_ref": 1.0
     }
    ],
    "panels": {
     "count": 200,
     "cp_metric": "Cp_level",
     "cfx_metric": "Cfx",
     "output": "CD_int"
    }
   }
  },
  {
   "id": "bwb_cdint",
   "environment": "bwb",
   "category": "continuous",
   "description": "Blended wing body, mean integrated drag from surface panels",
   "space": [
    {
     "name": "C2_C1",
     "kind": "continuous",
     "lower": 0.55,
     "upper": 0.85,
     "unit": ""
    },
    {
     "name": "C3_C1",
     "kind": "continuous",
     "lower": 0.18,
     "upper": 0.28,
     "unit": ""
    },
    {
     "name": "C4_C1",
     "kind": "continuous",
     "lower": 0.06,
     "upper": 0.09,
     "unit": ""
    },
    {
     "name": "B1_C1",
     "kind": "continuous",
     "lower": 0.1,
     "upper": 0.2,
     "unit": ""
    },
    {
     "name": "B2_C1",
     "kind": "continuous",
     "lower": 0.05,
     "upper": 0.2,
     "unit": ""
    },
    {
     "name": "B3_C1",
     "kind": "continuous",
     "lower": 0.2,
     "upper": 0.7,
     "unit": ""
    },
    {
     "name": "S1",
     "kind": "continuous",
     "lower": 40.0,
     "upper": 60.0,
     "unit": "deg"
    },
    {
     "name": "S2",
     "kind": "continuous",
     "lower": 40.0,
     "upper": 60.0,
     "unit": "deg"
    },
    {
     "name": "S3",
     "kind": "continuous",
     "lower": 24.0,
     "upper": 40.0,
     "unit": "deg"
    }
   ],
   "points": [
    {
     "cl_target": 0.185,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.206,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.206,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.206,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    },
    {
     "cl_target": 0.227,
     "mach": 0.3,
     "reynolds": 10000000.0,
     "weight": 1.0
    }
   ],
   "alpha_solve": {
    "cl_metric": "CL",
    "lo": -5.0,
    "hi": 12.0,
    "iters": 8
   },
   "constraints": [
    {
     "name": "alpha_range",
     "kind": "box",
     "expr": "alpha",
     "lower": -3.0,
     "upper": 3.0,
     "scale": 2.0,
     "per_point": true
    },
    {
     "name": "cl_reachability",
     "kind": "inequality",
     "expr": "bracketed",
     "op": ">=",
     "bound": 1.0,
     "scale": 1.0,
     "per_point": true
    }
   ],
   "penalty_weight": 0.0,
   "objectives": [
    {
     "name": "CD_int_mean",
     "expr": "CD_int",
     "aggregate": "mean",
     "sense": "minimize"
    }
   ],
   "evaluator": {
    "type": "stand_in",
    "seed": 303,
    "fields": [
     {
      "name": "CL",
      "lo": 0.05,
      "hi": 0.25,
      "alpha_slope": 0.04,
      "alpha_gain": 0.3
     },
     {
      "name": "Cfx",
      "lo": 0.002,
      "hi": 0.004,
      "alpha_quad": 2e-05,
      "alpha_ref": 2.0
     },
     {
      "name": "Cp_level",
      "lo": 0.0,
      "hi": 0.02,
      "alpha_quad": 0.0005,
      "alpha_ref": 1.0
     }
    ],
    "panels": {
     "count": 200,
     "cp_metric": "Cp_level",
     "cfx_metric": "Cfx",
     "output": "CD_int"
    }
   }
  },
  {
   "id": "swept_wing_sp",
   "environment": "swept_wing",
   "category": "continuous",
   "description": "Transonic swept wing, drag with a quadratic lift floor",
   "space": [
    {
     "name": "SA",
     "kind": "continuous",
     "lower": 25.0,
     "upper": 40.0,
     "unit": "deg"
    },
    {
     "name": "AR",
     "kind": "continuous",
     "lower": 8.0,
     "upper": 11.0,
     "unit": ""
    },
    {
     "name": "TR",
     "kind": "continuous",
     "lower": 0.15,
     "upper": 0.4,
     "unit": ""
    },
    {
     "name": "eta_k",
     "kind": "continuous",
     "lower": 0.36,
     "upper": 0.42,
     "unit": ""
    },
    {
     "name": "kappa_r",
     "kind": "continuous",
     "lower": 0.1,
     "upper": 1.1,
     "unit": ""
    },
    {
     "name": "gamma_k",
     "kind": "continuous",
     "lower": 0.5,
     "upper": 6.0,
     "unit": "deg"
    },
    {
     "name": "gamma_t",
     "kind": "continuous",
     "lower": 4.0,
     "upper": 6.0,
     "unit": "deg"
    },
    {
     "name": "t_r",
     "kind": "continuous",
     "lower": 0.14,
     "upper": 0.17,
     "unit": ""
    },
    {
     "name": "r_t2",
     "kind": "continuous",
     "lower": 0.6,
     "upper": 0.7,
     "unit": ""
    },
    {
     "name": "r_t3",
     "kind": "continuous",
     "lower": 0.9,
     "upper": 0.98,
     "unit": ""
    },
    {
     "name": "r_t4",
     "kind": "continuous",
     "lower": 0.92,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "r_d1",
     "kind": "continuous",
     "lower": 0.3,
     "upper": 0.8,
     "unit": ""
    },
    {
     "name": "r_d2",
     "kind": "continuous",
     "lower": 0.5,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "r_d4",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 0.8,
     "unit": ""
    },
    {
     "name": "theta_1",
     "kind": "continuous",
     "lower": -4.0,
     "upper": -2.0,
     "unit": "deg"
    },
    {
     "name": "theta_2",
     "kind": "continuous",
     "lower": -4.0,
     "upper": -2.0,
     "unit": "deg"
    },
    {
     "name": "theta_3",
     "kind": "continuous",
     "lower": -3.0,
     "upper": -1.0,
     "unit": "deg"
    },
    {
     "name": "theta_4",
     "kind": "continuous",
     "lower": -3.0,
     "upper": -1.0,
     "unit": "deg"
    },
    {
     "name": "c_u0",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u9",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_l0",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l9",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    }
   ],
   "points": [
    {
     "alpha": 3.0,
     "mach": 0.82,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "CD_penalized",
     "expr": "CD + 10 * max(0, 0.45 - CL)^2",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 401,
    "fields": [
     {
      "name": "CL",
      "lo": 0.2,
      "hi": 0.5,
      "alpha_slope": 0.06,
      "alpha_gain": 0.4,
      "alpha_ref": 3.0,
      "mach_slope": 0.3,
      "mach_ref": 0.8
     },
     {
      "name": "CD",
      "lo": 0.01,
      "hi": 0.025,
      "alpha_quad": 0.0003,
      "alpha_ref": 2.0,
      "mach_slope": 0.05,
      "mach_ref": 0.75
     }
    ]
   }
  },
  {
   "id": "swept_wing_mp",
   "environment": "swept_wing",
   "category": "continuous",
   "description": "Transonic swept wing, four-Mach mean of -M L/D plus lift-matching term",
   "space": [
    {
     "name": "SA",
     "kind": "continuous",
     "lower": 25.0,
     "upper": 40.0,
     "unit": "deg"
    },
    {
     "name": "AR",
     "kind": "continuous",
     "lower": 8.0,
     "upper": 11.0,
     "unit": ""
    },
    {
     "name": "TR",
     "kind": "continuous",
     "lower": 0.15,
     "upper": 0.4,
     "unit": ""
    },
    {
     "name": "eta_k",
     "kind": "continuous",
     "lower": 0.36,
     "upper": 0.42,
     "unit": ""
    },
    {
     "name": "kappa_r",
     "kind": "continuous",
     "lower": 0.1,
     "upper": 1.1,
     "unit": ""
    },
    {
     "name": "gamma_k",
     "kind": "continuous",
     "lower": 0.5,
     "upper": 6.0,
     "unit": "deg"
    },
    {
     "name": "gamma_t",
     "kind": "continuous",
     "lower": 4.0,
     "upper": 6.0,
     "unit": "deg"
    },
    {
     "name": "t_r",
     "kind": "continuous",
     "lower": 0.14,
     "upper": 0.17,
     "unit": ""
    },
    {
     "name": "r_t2",
     "kind": "continuous",
     "lower": 0.6,
     "upper": 0.7,
     "unit": ""
    },
    {
     "name": "r_t3",
     "kind": "continuous",
     "lower": 0.9,
     "upper": 0.98,
     "unit": ""
    },
    {
     "name": "r_t4",
     "kind": "continuous",
     "lower": 0.92,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "r_d1",
     "kind": "continuous",
     "lower": 0.3,
     "upper": 0.8,
     "unit": ""
    },
    {
     "name": "r_d2",
     "kind": "continuous",
     "lower": 0.5,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "r_d4",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 0.8,
     "unit": ""
    },
    {
     "name": "theta_1",
     "kind": "continuous",
     "lower": -4.0,
     "upper": -2.0,
     "unit": "deg"
    },
    {
     "name": "theta_2",
     "kind": "continuous",
     "lower": -4.0,
     "upper": -2.0,
     "unit": "deg"
    },
    {
     "name": "theta_3",
     "kind": "continuous",
     "lower": -3.0,
     "upper": -1.0,
     "unit": "deg"
    },
    {
     "name": "theta_4",
     "kind": "continuous",
     "lower": -3.0,
     "upper": -1.0,
     "unit": "deg"
    },
    {
     "name": "c_u0",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u9",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_l0",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l9",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.75,
     "cl_target": 0.55,
     "weight": 1.0
    },
    {
     "mach": 0.8,
     "cl_target": 0.55,
     "weight": 1.0
    },
    {
     "mach": 0.86,
     "cl_target": 0.55,
     "weight": 1.0
    },
    {
     "mach": 0.9,
     "cl_target": 0.55,
     "weight": 1.0
    }
   ],
   "alpha_solve": {
    "cl_metric": "CL",
    "lo": 2.0,
    "hi": 12.0,
    "iters": 8
   },
   "objectives": [
    {
     "name": "J",
     "expr": "-mach * CL / CD + 1.0 * (mach^2 * CL - mach * cl_target)^2",
     "aggregate": "mean",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 402,
    "fields": [
     {
      "name": "CL",
      "lo": 0.2,
      "hi": 0.5,
      "alpha_slope": 0.06,
      "alpha_gain": 0.4,
      "alpha_ref": 3.0,
      "mach_slope": 0.3,
      "mach_ref": 0.8
     },
     {
      "name": "CD",
      "lo": 0.01,
      "hi": 0.025,
      "alpha_quad": 0.0003,
      "alpha_ref": 2.0,
      "mach_slope": 0.05,
      "mach_ref": 0.75
     }
    ]
   }
  },
  {
   "id": "swept_wing_mp_b",
   "environment": "swept_wing",
   "category": "continuous",
   "description": "Transonic swept wing, lift-weighted sum over four lift targets at M 0.8",
   "space": [
    {
     "name": "SA",
     "kind": "continuous",
     "lower": 25.0,
     "upper": 40.0,
     "unit": "deg"
    },
    {
     "name": "AR",
     "kind": "continuous",
     "lower": 8.0,
     "upper": 11.0,
     "unit": ""
    },
    {
     "name": "TR",
     "kind": "continuous",
     "lower": 0.15,
     "upper": 0.4,
     "unit": ""
    },
    {
     "name": "eta_k",
     "kind": "continuous",
     "lower": 0.36,
     "upper": 0.42,
     "unit": ""
    },
    {
     "name": "kappa_r",
     "kind": "continuous",
     "lower": 0.1,
     "upper": 1.1,
     "unit": ""
    },
    {
     "name": "gamma_k",
     "kind": "continuous",
     "lower": 0.5,
     "upper": 6.0,
     "unit": "deg"
    },
    {
     "name": "gamma_t",
     "kind": "continuous",
     "lower": 4.0,
     "upper": 6.0,
     "unit": "deg"
    },
    {
     "name": "t_r",
     "kind": "continuous",
     "lower": 0.14,
     "upper": 0.17,
     "unit": ""
    },
    {
     "name": "r_t2",
     "kind": "continuous",
     "lower": 0.6,
     "upper": 0.7,
     "unit": ""
    },
    {
     "name": "r_t3",
     "kind": "continuous",
     "lower": 0.9,
     "upper": 0.98,
     "unit": ""
    },
    {
     "name": "r_t4",
     "kind": "continuous",
     "lower": 0.92,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "r_d1",
     "kind": "continuous",
     "lower": 0.3,
     "upper": 0.8,
     "unit": ""
    },
    {
     "name": "r_d2",
     "kind": "continuous",
     "lower": 0.5,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "r_d4",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 0.8,
     "unit": ""
    },
    {
     "name": "theta_1",
     "kind": "continuous",
     "lower": -4.0,
     "upper": -2.0,
     "unit": "deg"
    },
    {
     "name": "theta_2",
     "kind": "continuous",
     "lower": -4.0,
     "upper": -2.0,
     "unit": "deg"
    },
    {
     "name": "theta_3",
     "kind": "continuous",
     "lower": -3.0,
     "upper": -1.0,
     "unit": "deg"
    },
    {
     "name": "theta_4",
     "kind": "continuous",
     "lower": -3.0,
     "upper": -1.0,
     "unit": "deg"
    },
    {
     "name": "c_u0",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_u9",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "c_l0",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l1",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l2",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l3",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l4",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l5",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l6",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l7",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l8",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    },
    {
     "name": "c_l9",
     "kind": "continuous",
     "lower": -0.3,
     "upper": 0.3,
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.8,
     "cl_target": 0.3,
     "weight": 0.16666666666666669
    },
    {
     "mach": 0.8,
     "cl_target": 0.4,
     "weight": 0.22222222222222227
    },
    {
     "mach": 0.8,
     "cl_target": 0.5,
     "weight": 0.2777777777777778
    },
    {
     "mach": 0.8,
     "cl_target": 0.6,
     "weight": 0.33333333333333337
    }
   ],
   "alpha_solve": {
    "cl_metric": "CL",
    "lo": 2.0,
    "hi": 12.0,
    "iters": 8
   },
   "objectives": [
    {
     "name": "J",
     "expr": "-mach * CL / CD + 1.0 * (mach^2 * CL - mach * cl_target)^2",
     "aggregate": "weighted_sum",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 403,
    "fields": [
     {
      "name": "CL",
      "lo": 0.2,
      "hi": 0.5,
      "alpha_slope": 0.06,
      "alpha_gain": 0.4,
      "alpha_ref": 3.0,
      "mach_slope": 0.3,
      "mach_ref": 0.8
     },
     {
      "name": "CD",
      "lo": 0.01,
      "hi": 0.025,
      "alpha_quad": 0.0003,
      "alpha_ref": 2.0,
      "mach_slope": 0.05,
      "mach_ref": 0.75
     }
    ]
   }
  },
  {
   "id": "cca_ld",
   "environment": "cca",
   "category": "continuous",
   "description": "Collaborative combat aircraft, lift-to-drag at one operating point",
   "space": [
    {
     "name": "theta_d",
     "kind": "continuous",
     "lower": 0.25,
     "upper": 15.0,
     "unit": "deg"
    },
    {
     "name": "B_w",
     "kind": "continuous",
     "lower": 25.0,
     "upper": 1000.0,
     "unit": "mm"
    },
    {
     "name": "alpha_1",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 45.0,
     "unit": "deg"
    },
    {
     "name": "alpha_2",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 10.0,
     "unit": "deg"
    },
    {
     "name": "p_w",
     "kind": "continuous",
     "lower": 0.22,
     "upper": 0.51,
     "unit": ""
    },
    {
     "name": "x_r",
     "kind": "continuous",
     "lower": 4500.0,
     "upper": 7500.0,
     "unit": "mm"
    },
    {
     "name": "l_i",
     "kind": "continuous",
     "lower": 0.2,
     "upper": 0.6,
     "unit": ""
    },
    {
     "name": "n_naca",
     "kind": "categorical",
     "levels": [
      "1412",
      "12",
      "2408",
      "4412"
     ],
     "unit": ""
    },
    {
     "name": "theta_ft",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 10.0,
     "unit": "deg"
    },
    {
     "name": "theta_at",
     "kind": "continuous",
     "lower": 12.0,
     "upper": 32.5,
     "unit": "deg"
    },
    {
     "name": "h_ta",
     "kind": "continuous",
     "lower": 36.0,
     "upper": 220.0,
     "unit": "mm"
    },
    {
     "name": "h_ba",
     "kind": "continuous",
     "lower": 38.0,
     "upper": 208.0,
     "unit": "mm"
    },
    {
     "name": "b",
     "kind": "continuous",
     "lower": 6500.0,
     "upper": 20000.0,
     "unit": "mm"
    },
    {
     "name": "delta_r",
     "kind": "continuous",
     "lower": 992.0,
     "upper": 1770.0,
     "unit": "mm"
    },
    {
     "name": "c_r",
     "kind": "continuous",
     "lower": 1431.0,
     "upper": 2700.0,
     "unit": "mm"
    },
    {
     "name": "c_t",
     "kind": "continuous",
     "lower": 800.0,
     "upper": 1200.0,
     "unit": "mm"
    }
   ],
   "points": [
    {
     "alpha": 3.0,
     "mach": 0.4,
     "reynolds": 8000000.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "L/D",
     "expr": "CL / CD",
     "aggregate": "single",
     "sense": "maximize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 501,
    "fields": [
     {
      "name": "CL",
      "lo": 0.1,
      "hi": 0.5,
      "alpha_slope": 0.05,
      "alpha_ref": 3.0
     },
     {
      "name": "CD",
      "lo": 0.015,
      "hi": 0.04,
      "alpha_quad": 0.0002
     }
    ]
   }
  },
  {
   "id": "car_cd",
   "environment": "car",
   "category": "continuous",
   "description": "Passenger car (estateback), drag coefficient from pressure and shear forces",
   "space": [
    {
     "name": "car_size",
     "kind": "continuous",
     "lower": 0.8,
     "upper": 1.2,
     "unit": ""
    },
    {
     "name": "car_width",
     "kind": "continuous",
     "lower": -0.1,
     "upper": 0.1,
     "unit": "m"
    },
    {
     "name": "car_len",
     "kind": "continuous",
     "lower": -0.1,
     "upper": 0.1,
     "unit": "m"
    },
    {
     "name": "ramp_angle",
     "kind": "continuous",
     "lower": -8.0,
     "upper": 8.0,
     "unit": "deg"
    },
    {
     "name": "front_bumper_length",
     "kind": "continuous",
     "lower": -0.1,
     "upper": 0.1,
     "unit": "m"
    },
    {
     "name": "wind_screen_x",
     "kind": "continuous",
     "lower": -0.05,
     "upper": 0.05,
     "unit": "m"
    },
    {
     "name": "wind_screen_z",
     "kind": "continuous",
     "lower": -0.05,
     "upper": 0.05,
     "unit": "m"
    },
    {
     "name": "side_mirrors_x",
     "kind": "continuous",
     "lower": -0.05,
     "upper": 0.05,
     "unit": "m"
    },
    {
     "name": "side_mirrors_z",
     "kind": "continuous",
     "lower": -0.05,
     "upper": 0.05,
     "unit": "m"
    },
    {
     "name": "rear_window_x",
     "kind": "continuous",
     "lower": -0.05,
     "upper": 0.05,
     "unit": "m"
    },
    {
     "name": "rear_window_z",
     "kind": "continuous",
     "lower": -0.05,
     "upper": 0.05,
     "unit": "m"
    },
    {
     "name": "trunklid_angle",
     "kind": "continuous",
     "lower": -8.0,
     "upper": 8.0,
     "unit": "deg"
    },
    {
     "name": "trunklid_x",
     "kind": "continuous",
     "lower": -0.05,
     "upper": 0.05,
     "unit": "m"
    },
    {
     "name": "trunklid_z",
     "kind": "continuous",
     "lower": -0.05,
     "upper": 0.05,
     "unit": "m"
    },
    {
     "name": "diffusor_angle",
     "kind": "continuous",
     "lower": -8.0,
     "upper": 8.0,
     "unit": "deg"
    },
    {
     "name": "car_green_house_angle",
     "kind": "continuous",
     "lower": -8.0,
     "upper": 8.0,
     "unit": "deg"
    },
    {
     "name": "car_front_hood_angle",
     "kind": "continuous",
     "lower": -8.0,
     "upper": 8.0,
     "unit": "deg"
    },
    {
     "name": "car_air_intake_angle",
     "kind": "continuous",
     "lower": -8.0,
     "upper": 8.0,
     "unit": "deg"
    },
    {
     "name": "tires_diameter",
     "kind": "continuous",
     "lower": -0.013,
     "upper": 0.013,
     "unit": "m"
    },
    {
     "name": "tires_width",
     "kind": "continuous",
     "lower": -0.015,
     "upper": 0.015,
     "unit": "m"
    }
   ],
   "points": [
    {
     "mach": 0.1175,
     "weight": 1.0
    }
   ],
   "derived": [
    {
     "name": "drag",
     "expr": "drag_pressure + drag_shear"
    },
    {
     "name": "Cd",
     "expr": "car_cd(drag_pressure, drag_shear)"
    }
   ],
   "objectives": [
    {
     "name": "Cd",
     "expr": "Cd",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 601,
    "fields": [
     {
      "name": "drag_pressure",
      "lo": 100.0,
      "hi": 250.0
     },
     {
      "name": "drag_shear",
      "lo": 25.0,
      "hi": 45.0
     },
     {
      "name": "lift",
      "lo": -400.0,
      "hi": 200.0
     }
    ]
   },
   "diagnostics": {
    "angle_params": [
     "ramp_angle",
     "trunklid_angle",
     "diffusor_angle",
     "car_green_house_angle",
     "car_front_hood_angle",
     "car_air_intake_angle"
    ],
    "coupling": {
     "scale": "car_size",
     "scale_nominal": 1.0,
     "width": "car_width",
     "length": "car_len"
    },
    "required_metrics": [
     "drag",
     "Cd",
     "lift",
     "drag_pressure",
     "drag_shear"
    ],
    "expected_images": [
     "Pressure_iso.png",
     "Pressure_top.png",
     "Pressure_side.png",
     "WSSx_iso.png",
     "WSSx_top.png",
     "WSSx_side.png"
    ],
    "required_artifacts": [
     "base_vtk_path",
     "norm_stats_path"
    ],
    "compatibility_token": "E",
    "thresholds": {
     "margin_ratio": 0.05,
     "warn_fraction": 0.6,
     "warn_sum": 26.0,
     "warn_score": 2.4,
     "warn_rel_err": 0.02,
     "cd_min": 0.0,
     "cd_max": 1.5,
     "lift_warn_abs": 200000.0
    }
   }
  },
  {
   "id": "ceras_fuel",
   "environment": "ceras",
   "category": "mixed",
   "description": "CERAS airliner, fuel mass with a static-margin window",
   "space": [
    {
     "name": "x_mac",
     "kind": "continuous",
     "lower": 16.0,
     "upper": 18.0,
     "unit": "m"
    },
    {
     "name": "ar_wing",
     "kind": "continuous",
     "lower": 5.0,
     "upper": 11.0,
     "unit": ""
    },
    {
     "name": "ar_vt",
     "kind": "continuous",
     "lower": 1.5,
     "upper": 6.0,
     "unit": ""
    },
    {
     "name": "ar_ht",
     "kind": "continuous",
     "lower": 1.5,
     "upper": 6.0,
     "unit": ""
    },
    {
     "name": "taper_wing",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "sweep_wing",
     "kind": "continuous",
     "lower": 20.0,
     "upper": 30.0,
     "unit": "deg"
    },
    {
     "name": "cruise_altitude",
     "kind": "discrete",
     "levels": [
      30000.0,
      32000.0,
      34000.0,
      36000.0
     ],
     "unit": "ft"
    },
    {
     "name": "n_engines",
     "kind": "discrete",
     "levels": [
      2.0,
      3.0,
      4.0
     ],
     "unit": ""
    },
    {
     "name": "tail",
     "kind": "categorical",
     "levels": [
      "T-tail",
      "no T-tail"
     ],
     "unit": ""
    },
    {
     "name": "engine_position",
     "kind": "categorical",
     "levels": [
      "front engines",
      "rear engines"
     ],
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.78,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "FuelMass",
     "expr": "FuelMass",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "constraints": [
    {
     "name": "static_margin_min",
     "kind": "inequality",
     "expr": "StaticMargin",
     "op": ">=",
     "bound": 0.05,
     "scale": 0.05
    },
    {
     "name": "static_margin_max",
     "kind": "inequality",
     "expr": "StaticMargin",
     "op": "<=",
     "bound": 0.1,
     "scale": 0.05
    }
   ],
   "penalty_weight": 6000.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 701,
    "fields": [
     {
      "name": "FuelMass",
      "lo": 15000.0,
      "hi": 22000.0
     },
     {
      "name": "StaticMargin",
      "lo": -0.05,
      "hi": 0.25
     }
    ]
   }
  },
  {
   "id": "sta_ld",
   "environment": "sta",
   "category": "mixed",
   "description": "Supersonic transport, cruise lift-to-drag with configuration switches",
   "space": [
    {
     "name": "sweep_in",
     "kind": "continuous",
     "lower": 10.0,
     "upper": 50.0,
     "unit": "deg"
    },
    {
     "name": "sweep_out",
     "kind": "continuous",
     "lower": 10.0,
     "upper": 70.0,
     "unit": "deg"
    },
    {
     "name": "p_canard",
     "kind": "continuous",
     "lower": 0.1,
     "upper": 0.4,
     "unit": ""
    },
    {
     "name": "p_wing",
     "kind": "continuous",
     "lower": 0.4,
     "upper": 0.7,
     "unit": ""
    },
    {
     "name": "c_break",
     "kind": "continuous",
     "lower": 0.1,
     "upper": 0.9,
     "unit": ""
    },
    {
     "name": "s_break",
     "kind": "continuous",
     "lower": 0.1,
     "upper": 0.7,
     "unit": ""
    },
    {
     "name": "cranked",
     "kind": "categorical",
     "levels": [
      "false",
      "true"
     ],
     "unit": ""
    },
    {
     "name": "t_tail",
     "kind": "categorical",
     "levels": [
      "false",
      "true"
     ],
     "unit": ""
    },
    {
     "name": "canard",
     "kind": "categorical",
     "levels": [
      "false",
      "true"
     ],
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 1.5,
     "altitude": 50000.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "neg_L/D",
     "expr": "-CL / CD",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "stand_in",
    "seed": 801,
    "fields": [
     {
      "name": "CL",
      "lo": 0.08,
      "hi": 0.2
     },
     {
      "name": "CD",
      "lo": 0.015,
      "hi": 0.03
     }
    ]
   }
  },
  {
   "id": "sphere_10d",
   "environment": "analytic",
   "category": "analytic",
   "description": "Shifted sphere on [-1, 1]^10",
   "space": [
    {
     "name": "x0",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x1",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x2",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x3",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x4",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x5",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x6",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x7",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x8",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x9",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "f",
     "expr": "f",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "analytic",
    "function": "sphere",
    "center": [
     -0.5,
     -0.4,
     -0.3,
     -0.2,
     -0.1,
     0.0,
     0.1,
     0.2,
     0.3,
     0.4
    ]
   }
  },
  {
   "id": "quadratic_10d",
   "environment": "analytic",
   "category": "analytic",
   "description": "Axis-aligned convex quadratic on [0, 1]^10, interior optimum",
   "space": [
    {
     "name": "x0",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x1",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x2",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x3",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x4",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x5",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x6",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x7",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x8",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x9",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "f",
     "expr": "f",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "analytic",
    "function": "quadratic",
    "center": [
     0.3,
     0.34,
     0.38,
     0.42,
     0.46,
     0.5,
     0.54,
     0.58,
     0.62,
     0.66
    ],
    "weights": [
     1.0,
     2.0,
     3.0,
     4.0,
     5.0,
     6.0,
     7.0,
     8.0,
     9.0,
     10.0
    ]
   }
  },
  {
   "id": "rotated_quadratic_10d",
   "environment": "analytic",
   "category": "analytic",
   "description": "Rotated ill-conditioned quadratic on [-1, 1]^10",
   "space": [
    {
     "name": "x0",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x1",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x2",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x3",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x4",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x5",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x6",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x7",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x8",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x9",
     "kind": "continuous",
     "lower": -1.0,
     "upper": 1.0,
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "f",
     "expr": "f",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "analytic",
    "function": "rotated_quadratic",
    "center": [
     0.1,
     0.1,
     0.1,
     0.1,
     0.1,
     0.1,
     0.1,
     0.1,
     0.1,
     0.1
    ],
    "condition": 100.0,
    "seed": 7
   }
  },
  {
   "id": "rosenbrock_2d",
   "environment": "analytic",
   "category": "analytic",
   "description": "Rosenbrock valley on [-2, 2]^2",
   "space": [
    {
     "name": "x0",
     "kind": "continuous",
     "lower": -2.0,
     "upper": 2.0,
     "unit": ""
    },
    {
     "name": "x1",
     "kind": "continuous",
     "lower": -2.0,
     "upper": 2.0,
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "f",
     "expr": "f",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "analytic",
    "function": "rosenbrock"
   }
  },
  {
   "id": "forrester_1d",
   "environment": "analytic",
   "category": "analytic",
   "description": "Forrester multimodal function on [0, 1]",
   "space": [
    {
     "name": "x",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "f",
     "expr": "f",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "analytic",
    "function": "forrester"
   }
  },
  {
   "id": "linear_3d",
   "environment": "analytic",
   "category": "analytic",
   "description": "Linear objective on [0, 1]^3, optimum at the lower corner",
   "space": [
    {
     "name": "x0",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x1",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    },
    {
     "name": "x2",
     "kind": "continuous",
     "lower": 0.0,
     "upper": 1.0,
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "f",
     "expr": "f",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "analytic",
    "function": "linear",
    "weights": [
     1.0,
     2.0,
     3.0
    ]
   }
  },
  {
   "id": "categorical_only",
   "environment": "analytic",
   "category": "analytic",
   "description": "Pure categorical choice, no continuous variables",
   "space": [
    {
     "name": "a",
     "kind": "categorical",
     "levels": [
      "p",
      "q",
      "r"
     ],
     "unit": ""
    },
    {
     "name": "b",
     "kind": "categorical",
     "levels": [
      "s",
      "t"
     ],
     "unit": ""
    }
   ],
   "points": [
    {
     "mach": 0.0,
     "weight": 1.0
    }
   ],
   "objectives": [
    {
     "name": "f",
     "expr": "f",
     "aggregate": "single",
     "sense": "minimize"
    }
   ],
   "penalty_weight": 0.0,
   "evaluator": {
    "type": "analytic",
    "function": "sphere"
   }
  }
 ]
}
)SBCAT";

}  // namespace shapebench::detail
