//! Values transcribed from the bundled comparison tables at their
//! printed 6-decimal precision. Rows run s = 0..=10; columns are
//! the loads L1, L2, L3.

pub(crate) const LINEAR_ABM: [[f64; 3]; 11] = [
    [0.000000, 0.000000, 0.000000],
    [58.241762, 0.122200, 0.136038],
    [216.569135, 0.912690, 1.018175],
    [472.231987, 2.959673, 3.308340],
    [824.018631, 6.830863, 7.650506],
    [1270.753481, 13.074750, 14.671769],
    [1811.296055, 22.221220, 24.982726],
    [2444.539990, 34.782156, 39.177854],
    [3169.412094, 51.252025, 57.835881],
    [3984.871413, 72.108440, 81.520147],
    [4889.908324, 97.812711, 110.778966],
];

pub(crate) const LINEAR_NPM: [[f64; 3]; 11] = [
    [0.000000, 0.000000, 0.000000],
    [58.249029, 0.114027, 0.126944],
    [216.603012, 0.891958, 0.995030],
    [472.291839, 2.926723, 3.271438],
    [824.103833, 6.786029, 7.600138],
    [1270.863423, 13.018359, 14.608218],
    [1811.430139, 22.153588, 24.906273],
    [2444.697632, 34.703595, 39.088774],
    [3169.592721, 51.162836, 57.734443],
    [3985.074465, 72.008917, 81.406618],
    [4890.133254, 97.703141, 110.653605],
];

pub(crate) const EXPONENTIAL_ABM: [[f64; 3]; 11] = [
    [0.000000, 0.000000, 0.000000],
    [18.988642, 0.105437, 0.117578],
    [18.748146, 0.219107, 0.245295],
    [18.513934, 0.328934, 0.369679],
    [18.286698, 0.435044, 0.490805],
    [18.066244, 0.537556, 0.608748],
    [17.852383, 0.636586, 0.723579],
    [17.644931, 0.732247, 0.835369],
    [17.443709, 0.824649, 0.944190],
    [17.248540, 0.913898, 1.050109],
    [17.059256, 1.000097, 1.153195],
];

pub(crate) const EXPONENTIAL_NPM: [[f64; 3]; 11] = [
    [0.000000, 0.000000, 0.000000],
    [18.988592, 0.105145, 0.117021],
    [18.752821, 0.216590, 0.242237],
    [18.523194, 0.324269, 0.364185],
    [18.300406, 0.428303, 0.482940],
    [18.084267, 0.528808, 0.598573],
    [17.874593, 0.625901, 0.711155],
    [17.671201, 0.719691, 0.820757],
    [17.473918, 0.810285, 0.927446],
    [17.282570, 0.897787, 1.031291],
    [17.096990, 0.982299, 1.132359],
];

pub(crate) const PERIODIC_ABM: [[f64; 3]; 11] = [
    [0.000000, 0.000000, 0.000000],
    [1.420794, 0.003639, 0.004053],
    [3.352256, 0.018270, 0.020396],
    [4.795526, 0.043383, 0.048562],
    [5.304589, 0.073971, 0.083050],
    [5.281611, 0.104988, 0.118274],
    [5.607511, 0.135825, 0.153543],
    [6.832362, 0.170701, 0.193553],
    [8.669954, 0.214629, 0.243923],
    [10.261233, 0.268650, 0.305891],
    [10.964396, 0.328730, 0.375035],
];

pub(crate) const PERIODIC_NPM: [[f64; 3]; 11] = [
    [0.000000, 0.000000, 0.000000],
    [1.420289, 0.003637, 0.004052],
    [3.349409, 0.017505, 0.019538],
    [4.791798, 0.041836, 0.046821],
    [5.303706, 0.071660, 0.080440],
    [5.286096, 0.101974, 0.114856],
    [5.616323, 0.132176, 0.149388],
    [6.841809, 0.166454, 0.188698],
    [8.677051, 0.209775, 0.238353],
    [10.266407, 0.263162, 0.299573],
    [10.971053, 0.322611, 0.367966],
];
