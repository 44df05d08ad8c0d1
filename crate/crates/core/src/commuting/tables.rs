//! Numerator polynomials of the coefficients `f_j` of the commuting differential operators.
//!
//! Each monomial is `(coefficient, [power of N, power of Ω, power of α, power of x])`.

pub(crate) type Monomial = (f64, [u8; 4]);

/// Hermite: `f_2 = 3 (2x² + 1)^{-2} (Ω - x)² P`.
pub(crate) const H_F2: &[Monomial] = &[
    (4.0, [0, 1, 0, 6]),
    (-4.0, [0, 0, 0, 7]),
    (8.0, [1, 0, 0, 5]),
    (8.0, [0, 1, 0, 4]),
    (-12.0, [0, 0, 0, 5]),
    (8.0, [1, 0, 0, 3]),
    (21.0, [0, 1, 0, 2]),
    (-17.0, [0, 0, 0, 3]),
    (2.0, [1, 0, 0, 1]),
    (-7.0, [0, 1, 0, 0]),
    (10.0, [0, 0, 0, 1]),
];

/// Hermite: `f_1 = -3 (2x² + 1)^{-4} (Ω - x) P`.
pub(crate) const H_F1: &[Monomial] = &[
    (16.0, [0, 2, 0, 12]),
    (-32.0, [0, 1, 0, 13]),
    (16.0, [0, 0, 0, 14]),
    (64.0, [1, 1, 0, 11]),
    (-64.0, [1, 0, 0, 12]),
    (64.0, [2, 0, 0, 10]),
    (64.0, [0, 2, 0, 10]),
    (-160.0, [0, 1, 0, 11]),
    (96.0, [0, 0, 0, 12]),
    (192.0, [1, 1, 0, 9]),
    (-256.0, [1, 0, 0, 10]),
    (160.0, [2, 0, 0, 8]),
    (168.0, [0, 2, 0, 8]),
    (-272.0, [0, 1, 0, 9]),
    (72.0, [0, 0, 0, 10]),
    (416.0, [1, 1, 0, 7]),
    (-448.0, [1, 0, 0, 8]),
    (160.0, [2, 0, 0, 6]),
    (152.0, [0, 2, 0, 6]),
    (-192.0, [0, 1, 0, 7]),
    (-120.0, [0, 0, 0, 8]),
    (160.0, [1, 1, 0, 5]),
    (-128.0, [1, 0, 0, 6]),
    (80.0, [2, 0, 0, 4]),
    (-279.0, [0, 2, 0, 4]),
    (334.0, [0, 1, 0, 5]),
    (-359.0, [0, 0, 0, 6]),
    (-76.0, [1, 1, 0, 3]),
    (92.0, [1, 0, 0, 4]),
    (20.0, [2, 0, 0, 2]),
    (1210.0, [0, 2, 0, 2]),
    (-1662.0, [0, 1, 0, 3]),
    (324.0, [0, 0, 0, 4]),
    (-36.0, [1, 1, 0, 1]),
    (32.0, [1, 0, 0, 2]),
    (2.0, [2, 0, 0, 0]),
    (-83.0, [0, 2, 0, 0]),
    (610.0, [0, 1, 0, 1]),
    (-497.0, [0, 0, 0, 2]),
    (-2.0, [1, 0, 0, 0]),
    (18.0, [0, 0, 0, 0]),
];

/// Hermite: `f_0 = (2x² + 1)^{-6} P`.
pub(crate) const H_F0: &[Monomial] = &[
    (64.0, [0, 3, 0, 18]),
    (-192.0, [0, 2, 0, 19]),
    (192.0, [0, 1, 0, 20]),
    (-64.0, [0, 0, 0, 21]),
    (384.0, [1, 2, 0, 17]),
    (-768.0, [1, 1, 0, 18]),
    (384.0, [1, 0, 0, 19]),
    (768.0, [2, 1, 0, 16]),
    (384.0, [0, 3, 0, 16]),
    (-768.0, [2, 0, 0, 17]),
    (-1344.0, [0, 2, 0, 17]),
    (1536.0, [0, 1, 0, 18]),
    (-576.0, [0, 0, 0, 19]),
    (512.0, [3, 0, 0, 15]),
    (1920.0, [1, 2, 0, 15]),
    (-4608.0, [1, 1, 0, 16]),
    (2688.0, [1, 0, 0, 17]),
    (3456.0, [2, 1, 0, 14]),
    (624.0, [0, 3, 0, 14]),
    (-4224.0, [2, 0, 0, 15]),
    (-1296.0, [0, 2, 0, 15]),
    (336.0, [0, 1, 0, 16]),
    (336.0, [0, 0, 0, 17]),
    (2304.0, [3, 0, 0, 13]),
    (4128.0, [1, 2, 0, 13]),
    (-8640.0, [1, 1, 0, 14]),
    (4000.0, [1, 0, 0, 15]),
    (50496.0, [2, 1, 0, 12]),
    (112.0, [0, 3, 0, 12]),
    (-10176.0, [2, 0, 0, 13]),
    (3552.0, [0, 2, 0, 13]),
    (-10896.0, [0, 1, 0, 14]),
    (7616.0, [0, 0, 0, 15]),
    (4224.0, [3, 0, 0, 11]),
    (3840.0, [1, 2, 0, 11]),
    (37824.0, [1, 1, 0, 12]),
    (-1344.0, [1, 0, 0, 13]),
    (137184.0, [2, 1, 0, 10]),
    (-1332.0, [0, 3, 0, 10]),
    (-12192.0, [2, 0, 0, 11]),
    (12156.0, [0, 2, 0, 11]),
    (-29052.0, [0, 1, 0, 12]),
    (18996.0, [0, 0, 0, 13]),
    (4160.0, [3, 0, 0, 9]),
    (-1464.0, [1, 2, 0, 9]),
    (134928.0, [1, 1, 0, 10]),
    (-10584.0, [1, 0, 0, 11]),
    (165360.0, [2, 1, 0, 8]),
    (1200.0, [0, 3, 0, 8]),
    (-7440.0, [2, 0, 0, 9]),
    (9804.0, [0, 2, 0, 9]),
    (-31272.0, [0, 1, 0, 10]),
    (20940.0, [0, 0, 0, 11]),
    (2400.0, [3, 0, 0, 7]),
    (11160.0, [1, 2, 0, 7]),
    (153312.0, [1, 1, 0, 8]),
    (-9176.0, [1, 0, 0, 9]),
    (107784.0, [2, 1, 0, 6]),
    (17521.0, [0, 3, 0, 6]),
    (-1944.0, [2, 0, 0, 7]),
    (-24975.0, [0, 2, 0, 7]),
    (-1917.0, [0, 1, 0, 8]),
    (9851.0, [0, 0, 0, 9]),
    (816.0, [3, 0, 0, 5]),
    (8670.0, [1, 2, 0, 5]),
    (109500.0, [1, 1, 0, 6]),
    (-12858.0, [1, 0, 0, 7]),
    (39708.0, [2, 1, 0, 4]),
    (-139845.0, [0, 3, 0, 4]),
    (108.0, [2, 0, 0, 5]),
    (266580.0, [0, 2, 0, 5]),
    (-160785.0, [0, 1, 0, 6]),
    (31338.0, [0, 0, 0, 7]),
    (152.0, [3, 0, 0, 3]),
    (-1044.0, [1, 2, 0, 3]),
    (51324.0, [1, 1, 0, 4]),
    (-9792.0, [1, 0, 0, 5]),
    (7818.0, [2, 1, 0, 2]),
    (69189.0, [0, 3, 0, 2]),
    (162.0, [2, 0, 0, 3]),
    (-247383.0, [0, 2, 0, 3]),
    (242145.0, [0, 1, 0, 4]),
    (-68367.0, [0, 0, 0, 5]),
    (12.0, [3, 0, 0, 1]),
    (-1134.0, [1, 2, 0, 1]),
    (11466.0, [1, 1, 0, 2]),
    (-1964.0, [1, 0, 0, 3]),
    (642.0, [2, 1, 0, 0]),
    (-2097.0, [0, 3, 0, 0]),
    (24.0, [2, 0, 0, 1]),
    (27432.0, [0, 2, 0, 1]),
    (-56673.0, [0, 1, 0, 2]),
    (29088.0, [0, 0, 0, 3]),
    (582.0, [1, 1, 0, 0]),
    (144.0, [1, 0, 0, 1]),
    (1134.0, [0, 1, 0, 0]),
    (-1512.0, [0, 0, 0, 1]),
];

/// Laguerre, uncorrected: `f_1 = (Ω - x) (α + x)^{-2} P`. Does not reproduce the banded operator;
/// kept for [`Transcription::AsPrinted`](crate::diffops::Transcription).
pub(crate) const L_F1_UNCORRECTED: &[Monomial] = &[
    (1.0, [0, 1, 4, 0]),
    (2.0, [1, 1, 2, 1]),
    (-2.0, [0, 1, 3, 1]),
    (1.0, [0, 0, 4, 1]),
    (4.0, [1, 1, 1, 2]),
    (-2.0, [1, 0, 2, 2]),
    (-6.0, [0, 1, 2, 2]),
    (4.0, [0, 0, 3, 2]),
    (2.0, [1, 1, 0, 3]),
    (-4.0, [1, 0, 1, 3]),
    (-2.0, [0, 1, 1, 3]),
    (4.0, [0, 0, 2, 3]),
    (-2.0, [1, 0, 0, 4]),
    (1.0, [0, 1, 0, 4]),
    (-1.0, [0, 0, 0, 5]),
    (3.0, [0, 1, 3, 0]),
    (-11.0, [0, 1, 2, 1]),
    (6.0, [0, 0, 3, 1]),
    (-19.0, [0, 1, 1, 2]),
    (30.0, [0, 0, 2, 2]),
    (-5.0, [0, 1, 0, 3]),
    (30.0, [0, 0, 1, 3]),
    (6.0, [0, 0, 0, 4]),
    (-10.0, [0, 1, 1, 1]),
    (38.0, [0, 0, 2, 1]),
    (-2.0, [0, 1, 0, 2]),
    (96.0, [0, 0, 1, 2]),
    (50.0, [0, 0, 0, 3]),
];

/// Laguerre, uncorrected: `f_0 = (α + x)^{-3} P`.
pub(crate) const L_F0_UNCORRECTED: &[Monomial] = &[
    (2.0, [2, 0, 5, 0]),
    (-4.0, [1, 1, 5, 0]),
    (-4.0, [1, 0, 6, 0]),
    (-9.0, [0, 0, 7, 0]),
    (10.0, [2, 0, 4, 1]),
    (-8.0, [1, 1, 4, 1]),
    (-8.0, [1, 0, 5, 1]),
    (-25.0, [0, 0, 6, 1]),
    (20.0, [2, 0, 3, 2]),
    (-22.0, [0, 0, 5, 2]),
    (20.0, [2, 0, 2, 3]),
    (8.0, [1, 1, 2, 3]),
    (8.0, [1, 0, 3, 3]),
    (-6.0, [0, 0, 4, 3]),
    (10.0, [2, 0, 1, 4]),
    (4.0, [1, 1, 1, 4]),
    (4.0, [1, 0, 2, 4]),
    (-1.0, [0, 0, 3, 4]),
    (2.0, [2, 0, 0, 5]),
    (-1.0, [0, 0, 2, 5]),
    (2.0, [1, 2, 3, 0]),
    (-32.0, [1, 1, 4, 0]),
    (-2.0, [0, 2, 4, 0]),
    (-40.0, [1, 0, 5, 0]),
    (13.0, [0, 1, 5, 0]),
    (-86.0, [0, 0, 6, 0]),
    (10.0, [1, 2, 2, 1]),
    (-88.0, [1, 1, 3, 1]),
    (-10.0, [0, 2, 3, 1]),
    (-128.0, [1, 0, 4, 1]),
    (34.0, [0, 1, 4, 1]),
    (-249.0, [0, 0, 5, 1]),
    (14.0, [1, 2, 1, 2]),
    (-80.0, [1, 1, 2, 2]),
    (-14.0, [0, 2, 2, 2]),
    (-154.0, [1, 0, 3, 2]),
    (24.0, [0, 1, 3, 2]),
    (-240.0, [0, 0, 4, 2]),
    (6.0, [1, 2, 0, 3]),
    (-24.0, [1, 1, 1, 3]),
    (-6.0, [0, 2, 1, 3]),
    (-90.0, [1, 0, 2, 3]),
    (-2.0, [0, 1, 2, 3]),
    (-82.0, [0, 0, 3, 3]),
    (-30.0, [1, 0, 1, 4]),
    (-5.0, [0, 1, 1, 4]),
    (-10.0, [0, 0, 2, 4]),
    (-6.0, [1, 0, 0, 5]),
    (-5.0, [0, 0, 1, 5]),
    (-80.0, [1, 1, 3, 0]),
    (-7.0, [0, 2, 3, 0]),
    (-78.0, [1, 0, 4, 0]),
    (97.0, [0, 1, 4, 0]),
    (-374.0, [0, 0, 5, 0]),
    (-240.0, [1, 1, 2, 1]),
    (-43.0, [0, 2, 2, 1]),
    (-234.0, [1, 0, 3, 1]),
    (293.0, [0, 1, 3, 1]),
    (-1058.0, [0, 0, 4, 1]),
    (-240.0, [1, 1, 1, 2]),
    (-57.0, [0, 2, 1, 2]),
    (-234.0, [1, 0, 2, 2]),
    (311.0, [0, 1, 2, 2]),
    (-946.0, [0, 0, 3, 2]),
    (-80.0, [1, 1, 0, 3]),
    (-21.0, [0, 2, 0, 3]),
    (-78.0, [1, 0, 1, 3]),
    (115.0, [0, 1, 1, 3]),
    (-222.0, [0, 0, 2, 3]),
    (40.0, [0, 0, 1, 4]),
    (2.0, [0, 2, 2, 0]),
    (242.0, [0, 1, 3, 0]),
    (-920.0, [0, 0, 4, 0]),
    (-6.0, [0, 2, 1, 1]),
    (790.0, [0, 1, 2, 1]),
    (-2684.0, [0, 0, 3, 1]),
    (884.0, [0, 1, 1, 2]),
    (-2596.0, [0, 0, 2, 2]),
    (320.0, [0, 1, 0, 3]),
    (-840.0, [0, 0, 1, 3]),
    (-1200.0, [0, 0, 3, 0]),
    (-3600.0, [0, 0, 2, 1]),
    (-3600.0, [0, 0, 1, 2]),
    (-1200.0, [0, 0, 0, 3]),
];

/// Laguerre: `f_1 = (Ω - x) P / (2 (α + x)²)`.
pub(crate) const L_F1: &[Monomial] = &[
    (-1.0, [0, 1, 4, 0]),
    (-4.0, [0, 0, 2, 1]),
    (-3.0, [0, 0, 4, 1]),
    (4.0, [0, 1, 1, 1]),
    (-4.0, [0, 1, 3, 1]),
    (-4.0, [1, 0, 3, 1]),
    (-16.0, [0, 0, 1, 2]),
    (-8.0, [0, 0, 3, 2]),
    (-4.0, [0, 1, 0, 2]),
    (-6.0, [0, 1, 2, 2]),
    (-12.0, [1, 0, 2, 2]),
    (-4.0, [0, 0, 0, 3]),
    (-6.0, [0, 0, 2, 3]),
    (-4.0, [0, 1, 1, 3]),
    (-12.0, [1, 0, 1, 3]),
    (-1.0, [0, 1, 0, 4]),
    (-4.0, [1, 0, 0, 4]),
    (1.0, [0, 0, 0, 5]),
];

/// Laguerre: `f_0 = P / (16 x² (α + x)⁴)`.
pub(crate) const L_F0: &[Monomial] = &[
    (-4.0, [0, 2, 6, 0]),
    (1.0, [0, 2, 8, 0]),
    (6.0, [0, 1, 8, 1]),
    (-24.0, [0, 2, 5, 1]),
    (8.0, [0, 2, 7, 1]),
    (8.0, [1, 1, 7, 1]),
    (-6400.0, [0, 0, 4, 2]),
    (-4800.0, [0, 0, 5, 2]),
    (-2148.0, [0, 0, 6, 2]),
    (-560.0, [0, 0, 7, 2]),
    (-71.0, [0, 0, 8, 2]),
    (-32.0, [0, 1, 3, 2]),
    (1600.0, [0, 1, 4, 2]),
    (600.0, [0, 1, 5, 2]),
    (8.0, [0, 1, 7, 2]),
    (-32.0, [0, 2, 2, 2]),
    (-152.0, [0, 2, 4, 2]),
    (-80.0, [0, 2, 5, 2]),
    (12.0, [0, 2, 6, 2]),
    (-608.0, [1, 0, 5, 2]),
    (-320.0, [1, 0, 6, 2]),
    (-40.0, [1, 0, 7, 2]),
    (-672.0, [1, 1, 4, 2]),
    (-320.0, [1, 1, 5, 2]),
    (-8.0, [1, 1, 6, 2]),
    (16.0, [2, 0, 6, 2]),
    (-25536.0, [0, 0, 3, 3]),
    (-19200.0, [0, 0, 4, 3]),
    (-8560.0, [0, 0, 5, 3]),
    (-2240.0, [0, 0, 6, 3]),
    (-272.0, [0, 0, 7, 3]),
    (160.0, [0, 1, 2, 3]),
    (6400.0, [0, 1, 3, 3]),
    (2448.0, [0, 1, 4, 3]),
    (-16.0, [0, 1, 6, 3]),
    (96.0, [0, 2, 1, 3]),
    (-448.0, [0, 2, 3, 3]),
    (-320.0, [0, 2, 4, 3]),
    (-8.0, [0, 2, 5, 3]),
    (-2368.0, [1, 0, 4, 3]),
    (-1280.0, [1, 0, 5, 3]),
    (-120.0, [1, 0, 6, 3]),
    (-2656.0, [1, 1, 3, 3]),
    (-1280.0, [1, 1, 4, 3]),
    (-88.0, [1, 1, 5, 3]),
    (96.0, [2, 0, 5, 3]),
    (-38464.0, [0, 0, 2, 4]),
    (-28800.0, [0, 0, 3, 4]),
    (-12816.0, [0, 0, 4, 4]),
    (-3360.0, [0, 0, 5, 4]),
    (-380.0, [0, 0, 6, 4]),
    (-64.0, [0, 1, 1, 4]),
    (9600.0, [0, 1, 2, 4]),
    (3760.0, [0, 1, 3, 4]),
    (-24.0, [0, 1, 5, 4]),
    (-612.0, [0, 2, 2, 4]),
    (-480.0, [0, 2, 3, 4]),
    (-26.0, [0, 2, 4, 4]),
    (-3424.0, [1, 0, 3, 4]),
    (-1920.0, [1, 0, 4, 4]),
    (-72.0, [1, 0, 5, 4]),
    (-3936.0, [1, 1, 2, 4]),
    (-1920.0, [1, 1, 3, 4]),
    (-104.0, [1, 1, 4, 4]),
    (240.0, [2, 0, 4, 4]),
    (-25600.0, [0, 0, 1, 5]),
    (-19200.0, [0, 0, 2, 5]),
    (-8592.0, [0, 0, 3, 5]),
    (-2240.0, [0, 0, 4, 5]),
    (-224.0, [0, 0, 5, 5]),
    (6400.0, [0, 1, 1, 5]),
    (2592.0, [0, 1, 2, 5]),
    (12.0, [0, 1, 4, 5]),
    (-392.0, [0, 2, 1, 5]),
    (-320.0, [0, 2, 2, 5]),
    (-8.0, [0, 2, 3, 5]),
    (-2144.0, [1, 0, 2, 5]),
    (-1280.0, [1, 0, 3, 5]),
    (104.0, [1, 0, 4, 5]),
    (-2592.0, [1, 1, 1, 5]),
    (-1280.0, [1, 1, 2, 5]),
    (24.0, [1, 1, 3, 5]),
    (320.0, [2, 0, 3, 5]),
    (-6400.0, [0, 0, 0, 6]),
    (-4800.0, [0, 0, 1, 6]),
    (-2260.0, [0, 0, 2, 6]),
    (-560.0, [0, 0, 3, 6]),
    (-50.0, [0, 0, 4, 6]),
    (1600.0, [0, 1, 0, 6]),
    (696.0, [0, 1, 1, 6]),
    (24.0, [0, 1, 3, 6]),
    (-96.0, [0, 2, 0, 6]),
    (-80.0, [0, 2, 1, 6]),
    (12.0, [0, 2, 2, 6]),
    (-448.0, [1, 0, 1, 6]),
    (-320.0, [1, 0, 2, 6]),
    (136.0, [1, 0, 3, 6]),
    (-640.0, [1, 1, 0, 6]),
    (-320.0, [1, 1, 1, 6]),
    (104.0, [1, 1, 2, 6]),
    (240.0, [2, 0, 2, 6]),
    (-96.0, [0, 0, 1, 7]),
    (-16.0, [0, 0, 3, 7]),
    (16.0, [0, 1, 0, 7]),
    (8.0, [0, 2, 1, 7]),
    (32.0, [1, 0, 0, 7]),
    (24.0, [1, 0, 2, 7]),
    (56.0, [1, 1, 1, 7]),
    (96.0, [2, 0, 1, 7]),
    (-24.0, [0, 0, 0, 8]),
    (-12.0, [0, 0, 2, 8]),
    (-8.0, [0, 1, 1, 8]),
    (1.0, [0, 2, 0, 8]),
    (-24.0, [1, 0, 1, 8]),
    (8.0, [1, 1, 0, 8]),
    (16.0, [2, 0, 0, 8]),
    (-2.0, [0, 1, 0, 9]),
    (-8.0, [1, 0, 0, 9]),
    (1.0, [0, 0, 0, 10]),
];
