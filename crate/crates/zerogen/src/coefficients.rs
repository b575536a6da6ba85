// Generated by scripts/rs_coefficients.py; do not edit.
// Taylor coefficients in z = p - 1/2 of the Riemann-Siegel terms C0..C4.

pub(crate) const C0: [f64; 47] = [
    3.826_834_323_650_898e-1,
    0.0,
    1.748_961_872_310_081_7,
    0.0,
    2.118_025_207_685_496,
    0.0,
    -8.707_216_670_511_481e-1,
    0.0,
    -3.473_311_224_346_516_7,
    0.0,
    -1.662_694_730_899_932_5,
    0.0,
    1.216_731_288_919_232,
    0.0,
    1.301_430_416_100_797_7,
    0.0,
    3.051_102_182_736_167e-2,
    0.0,
    -3.755_803_051_545_095e-1,
    0.0,
    -1.085_784_416_564_066e-1,
    0.0,
    5.183_290_299_954_962_4e-2,
    0.0,
    2.999_948_061_990_227_7e-2,
    0.0,
    -2.275_939_670_612_564_4e-3,
    0.0,
    -4.382_647_416_580_339e-3,
    0.0,
    -4.064_230_183_729_847e-4,
    0.0,
    4.006_097_785_422_114e-4,
    0.0,
    8.971_057_991_388_841e-5,
    0.0,
    -2.302_565_002_723_910_8e-5,
    0.0,
    -9.380_006_601_906_792e-6,
    0.0,
    6.323_514_947_609_108e-7,
    0.0,
    6.551_022_819_231_502e-7,
    0.0,
    2.210_523_745_552_697e-8,
    0.0,
    -3.322_316_176_445_629e-8,
];

pub(crate) const C1: [f64; 48] = [
    0.0,
    -5.365_020_525_675_069_7e-2,
    0.0,
    1.102_781_874_108_148_3e-1,
    0.0,
    1.231_720_015_431_522_7,
    0.0,
    1.263_496_486_279_945_8,
    0.0,
    -1.695_108_997_559_503,
    0.0,
    -2.999_871_196_765_010_2,
    0.0,
    -1.081_994_495_989_920_8e-1,
    0.0,
    1.940_766_294_621_271_4,
    0.0,
    7.838_423_561_500_687e-1,
    0.0,
    -5.054_829_667_900_366e-1,
    0.0,
    -3.845_072_349_605_797_6e-1,
    0.0,
    3.747_264_646_531_532e-2,
    0.0,
    9.092_026_610_973_176e-2,
    0.0,
    1.044_923_755_006_451e-2,
    0.0,
    -1.258_297_965_158_341_7e-2,
    0.0,
    -3.399_503_721_151_274e-3,
    0.0,
    1.041_095_053_771_489_1e-3,
    0.0,
    5.010_949_051_118_486e-4,
    0.0,
    -3.956_359_669_003_182e-5,
    0.0,
    -4.762_459_245_357_189_6e-5,
    0.0,
    -1.853_935_533_808_513_3e-6,
    0.0,
    3.193_691_808_006_897_3e-6,
    0.0,
    4.090_780_760_850_606_5e-7,
    0.0,
    -1.544_662_433_257_663_1e-7,
];

pub(crate) const C2: [f64; 51] = [
    5.188_542_830_293_168e-3,
    0.0,
    1.237_863_355_225_389_8e-3,
    0.0,
    -1.813_750_572_516_699_7e-1,
    0.0,
    1.429_149_274_853_212_5e-1,
    0.0,
    1.330_339_176_668_756_5,
    0.0,
    3.522_472_353_403_734e-1,
    0.0,
    -2.421_001_595_891_951,
    0.0,
    -1.676_078_702_253_810_8,
    0.0,
    1.368_941_672_332_837_1,
    0.0,
    1.553_901_943_022_298_2,
    0.0,
    -1.722_164_273_472_998e-1,
    0.0,
    -6.359_068_055_045_431e-1,
    0.0,
    -9.911_649_873_041_208e-2,
    0.0,
    1.403_348_006_738_700_8e-1,
    0.0,
    4.782_352_019_827_292e-2,
    0.0,
    -1.735_604_064_147_978_2e-2,
    0.0,
    -1.022_501_253_402_859_3e-2,
    0.0,
    9.274_149_159_794_888e-4,
    0.0,
    1.357_219_437_237_338_6e-3,
    0.0,
    6.413_690_120_293_88e-5,
    0.0,
    -1.230_080_569_819_663e-4,
    0.0,
    -1.831_350_740_478_92e-5,
    0.0,
    7.821_628_604_322_627e-6,
    0.0,
    2.008_754_248_475_994_6e-6,
    0.0,
    -3.353_276_539_318_571_4e-7,
    0.0,
    -1.461_602_091_741_823_2e-7,
];

pub(crate) const C3: [f64; 52] = [
    0.0,
    -2.679_432_181_438_913_6e-3,
    0.0,
    2.995_372_109_103_515e-2,
    0.0,
    -4.257_017_254_182_869_6e-2,
    0.0,
    -2.899_796_577_980_388_6e-1,
    0.0,
    4.888_831_999_235_446e-1,
    0.0,
    1.230_855_876_395_746,
    0.0,
    -8.297_560_708_527_408e-1,
    0.0,
    -2.249_763_536_666_567,
    0.0,
    7.845_139_961_005_472e-2,
    0.0,
    1.746_749_280_086_889_3,
    0.0,
    4.596_808_097_974_993_7e-1,
    0.0,
    -6.619_353_471_039_775e-1,
    0.0,
    -3.159_044_103_617_363_3e-1,
    0.0,
    1.284_479_254_520_749_5e-1,
    0.0,
    1.007_338_271_662_615_2e-1,
    0.0,
    -9.530_183_848_825_268e-3,
    0.0,
    -1.926_442_168_751_408_8e-2,
    0.0,
    -1.246_463_715_876_929e-3,
    0.0,
    2.424_396_964_110_308_6e-3,
    0.0,
    4.376_476_977_418_57e-4,
    0.0,
    -2.071_403_268_700_179_2e-4,
    0.0,
    -6.274_344_504_186_516e-5,
    0.0,
    1.157_534_381_459_567e-5,
    0.0,
    5.883_854_924_540_38e-6,
    0.0,
    -3.124_677_400_696_336e-7,
    0.0,
    -4.024_065_775_498_959_5e-7,
];

pub(crate) const C4: [f64; 53] = [
    4.648_338_936_176_338_3e-4,
    0.0,
    -4.022_642_946_136_188e-3,
    0.0,
    3.847_177_051_796_127e-3,
    0.0,
    6.581_175_135_809_486e-2,
    0.0,
    -1.960_412_434_369_444_8e-1,
    0.0,
    -2.085_405_368_635_885_3e-1,
    0.0,
    9.507_754_185_141_751e-1,
    0.0,
    5.341_535_312_914_873e-1,
    0.0,
    -1.676_349_441_176_34,
    0.0,
    -1.076_747_157_875_129,
    0.0,
    1.235_339_301_656_597,
    0.0,
    1.025_782_534_005_727_6,
    0.0,
    -4.012_409_579_398_854_6e-1,
    0.0,
    -5.036_663_995_108_304e-1,
    0.0,
    3.573_487_795_502_745e-2,
    0.0,
    1.443_176_308_678_541_8e-1,
    0.0,
    1.509_152_741_790_347e-2,
    0.0,
    -2.609_887_477_919_436_3e-2,
    0.0,
    -6.126_628_379_519_262e-3,
    0.0,
    3.077_503_129_870_841e-3,
    0.0,
    1.156_247_893_408_875_3e-3,
    0.0,
    -2.277_596_675_847_212_7e-4,
    0.0,
    -1.418_963_711_818_144_5e-4,
    0.0,
    7.464_860_307_955_919_5e-6,
    0.0,
    1.247_970_164_540_911_7e-5,
    0.0,
    4.863_945_184_002_094e-7,
    0.0,
    -8.210_237_414_123_167e-7,
];
