// Polynomial coefficients u_k(t), v_k(t) for the uniform large-order
// asymptotic expansions of the modified Bessel functions (ascending powers
// of t, k = 0..=10). Generated from the standard recurrence
// u_{k+1} = t^2(1-t^2)/2 u_k' + 1/8 * int_0^t (1-5 s^2) u_k ds.

pub(crate) const UK: [&[f64]; 11] = [
    &[1.0],
    &[0.0, 0.125, 0.0, -0.20833333333333334],
    &[0.0, 0.0, 0.0703125, 0.0, -0.4010416666666667, 0.0, 0.3342013888888889],
    &[0.0, 0.0, 0.0, 0.0732421875, 0.0, -0.8912109375, 0.0, 1.8464626736111112, 0.0, -1.0258125964506173],
    &[0.0, 0.0, 0.0, 0.0, 0.112152099609375, 0.0, -2.3640869140625, 0.0, 8.78912353515625, 0.0, -11.207002616222994, 0.0, 4.669584423426247],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.22710800170898438, 0.0, -7.368794359479632, 0.0, 42.53499874538846, 0.0, -91.81824154324002, 0.0, 84.63621767460073, 0.0, -28.212072558200244],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5725014209747314, 0.0, -26.491430486951554, 0.0, 218.1905117442116, 0.0, -699.5796273761325, 0.0, 1059.9904525279999, 0.0, -765.2524681411817, 0.0, 212.57013003921713],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.7277275025844574, 0.0, -108.09091978839466, 0.0, 1200.9029132163525, 0.0, -5305.646978613403, 0.0, 11655.393336864534, 0.0, -13586.550006434138, 0.0, 8061.722181737309, 0.0, -1919.457662318407],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 6.074042001273483, 0.0, -493.915304773088, 0.0, 7109.514302489364, 0.0, -41192.65496889755, 0.0, 122200.46498301746, 0.0, -203400.17728041555, 0.0, 192547.00123253153, 0.0, -96980.59838863752, 0.0, 20204.29133096615],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 24.380529699556064, 0.0, -2499.8304818112097, 0.0, 45218.76898136273, 0.0, -331645.1724845636, 0.0, 1268365.2733216248, 0.0, -2813563.226586534, 0.0, 3763271.297656404, 0.0, -2998015.9185381066, 0.0, 1311763.6146629772, 0.0, -242919.18790055133],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 110.01714026924674, 0.0, -13886.08975371704, 0.0, 308186.4046126624, 0.0, -2785618.1280864547, 0.0, 13288767.166421818, 0.0, -37567176.66076335, 0.0, 66344512.27472903, 0.0, -74105148.21153265, 0.0, 50952602.49266464, 0.0, -19706819.118432228, 0.0, 3284469.853072038],
];

pub(crate) const VK: [&[f64]; 11] = [
    &[1.0],
    &[0.0, -0.375, 0.0, 0.2916666666666667],
    &[0.0, 0.0, -0.1171875, 0.0, 0.515625, 0.0, -0.3949652777777778],
    &[0.0, 0.0, 0.0, -0.1025390625, 0.0, 1.0892578125, 0.0, -2.1305338541666665, 0.0, 1.1464964313271604],
    &[0.0, 0.0, 0.0, 0.0, -0.144195556640625, 0.0, 2.7939208984375, 0.0, -9.961006673177083, 0.0, 12.386687102141204, 0.0, -5.0756352428546165],
    &[0.0, 0.0, 0.0, 0.0, 0.0, -0.2775764465332031, 0.0, 8.502455030168806, 0.0, -47.53911624484592, 0.0, 100.56283597592954, 0.0, -91.40711508856879, 0.0, 30.15773273462785],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.6765925884246826, 0.0, 30.023621218545095, 0.0, -241.15793403307597, 0.0, 760.412638452318, 0.0, -1138.5082638263702, 0.0, 814.6235951180321, 0.0, -224.71699461288668],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.993531733751297, 0.0, 120.80749858702931, 0.0, -1315.2746192369575, 0.0, 5730.098736902475, 0.0, -12459.213566993121, 0.0, 14409.977279551358, 0.0, -8497.490948317705, 0.0, 2013.0897434071098],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -6.883914268109947, 0.0, 545.9063894860446, 0.0, -7727.732937488438, 0.0, 44243.96274437144, 0.0, -130084.36594966374, 0.0, 215023.04455358215, 0.0, -202421.2064239434, 0.0, 101491.32389508576, 0.0, -21064.0484088796],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -27.248827311268542, 0.0, 2737.909575317039, 0.0, -48836.270499871745, 0.0, 354517.25334556797, 0.0, -1345235.895947178, 0.0, 2965647.7253209413, 0.0, -3946845.50729818, 0.0, 3131261.0704731336, 0.0, -1365304.9866900374, 0.0, 252085.9497081193],
    &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -121.59789187653587, 0.0, 15093.575819257652, 0.0, -331015.02717656334, 0.0, 2965335.4266726775, 0.0, -14048125.290217351, 0.0, 39493698.5408025, 0.0, -69430303.54332107, 0.0, 77258558.77372554, 0.0, -52950743.766886786, 0.0, 20423430.722738855, 0.0, -3395807.814193124],
];
