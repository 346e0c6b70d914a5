"""Asymptotic null quantiles for the Johansen trace and max-eigenvalue tests.

Generated by tools/gen_johansen_tables.py: direct simulation of the
limiting Brownian-motion functionals (Johansen 1995, ch. 11) on a
T=300/900 step grid with Richardson extrapolation in 1/T,
numpy PCG64 streams, base seed 20240917, 50,000/25,000 replications (d<=6 / d>6).
Checked against the MacKinnon-Haug-Michelis (1996) asymptotic critical
values where published.  Do not edit by hand.
"""

PROBS = (0.0001, 0.0005, 0.001, 0.0025, 0.005, 0.01, 0.025, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.925, 0.95, 0.9625, 0.975, 0.9875, 0.99, 0.995, 0.9975, 0.999, 0.9995, 0.9999)

TRACE_Q = {
    'none': {
        1: (0.0000, 0.0000, 0.0000, 0.0000, 0.0001, 0.0002, 0.0014, 0.0053, 0.0221, 0.0526, 0.0948, 0.1475, 0.2125, 0.2904, 0.3787, 0.4846, 0.5992, 0.7330, 0.8946, 1.0739, 1.2891, 1.5420, 1.8685, 2.3397, 2.9799, 3.4715, 4.0948, 4.6135, 5.3131, 6.5798, 7.0375, 8.2079, 9.2791, 10.7960, 11.9511, 13.9368),
        2: (0.5625, 0.6444, 0.7446, 0.8846, 1.0546, 1.2381, 1.6031, 1.9807, 2.5259, 2.9605, 3.3307, 3.6969, 4.0684, 4.4286, 4.7643, 5.1121, 5.4750, 5.8549, 6.2619, 6.7013, 7.1936, 7.7938, 8.4553, 9.3145, 10.4932, 11.2909, 12.2966, 13.0589, 14.0362, 15.6879, 16.1736, 17.8331, 19.5529, 22.4882, 24.0249, 28.9581),
        3: (3.6288, 4.2743, 4.5379, 5.0472, 5.5261, 6.0822, 7.1166, 8.0013, 9.1462, 10.0441, 10.7756, 11.4459, 12.0403, 12.6287, 13.1778, 13.7886, 14.3729, 15.0182, 15.6594, 16.3920, 17.1489, 18.0082, 19.0334, 20.2165, 21.8032, 22.8389, 24.2205, 25.0454, 26.4281, 28.6150, 29.1836, 30.9418, 32.7253, 36.3911, 37.2231, 42.4603),
        4: (10.6600, 11.5446, 12.1340, 13.0147, 13.9907, 15.0612, 16.6237, 18.0966, 19.8414, 21.1286, 22.2202, 23.1875, 24.0676, 24.9051, 25.7045, 26.5275, 27.3232, 28.1833, 29.0867, 30.0336, 31.0115, 32.1115, 33.3985, 34.8968, 36.8786, 38.1684, 39.9467, 41.1484, 42.8491, 45.7989, 46.5335, 49.2587, 51.4591, 55.1116, 57.3292, 62.7416),
        5: (21.1366, 22.7199, 23.8291, 25.3769, 26.5249, 28.0974, 30.2328, 32.1247, 34.5562, 36.3191, 37.7171, 39.0312, 40.1920, 41.3590, 42.3768, 43.3939, 44.4243, 45.4985, 46.6138, 47.7551, 49.0085, 50.3462, 51.9285, 53.7283, 56.0885, 57.7562, 60.0753, 61.5180, 63.2486, 66.4488, 67.3636, 70.9515, 74.0240, 78.5589, 81.2665, 87.6048),
        6: (34.8246, 38.4299, 40.0224, 41.3421, 43.1719, 44.8594, 47.7817, 50.3623, 53.4147, 55.4669, 57.2601, 58.8819, 60.2787, 61.6863, 62.9696, 64.2048, 65.4991, 66.7632, 68.1070, 69.4815, 70.9489, 72.5712, 74.3802, 76.6435, 79.5132, 81.2811, 84.0323, 85.7177, 88.0890, 91.9269, 92.9547, 96.4026, 99.7467, 104.4306, 106.8021, 114.3639),
        7: (54.8700, 57.2760, 59.3766, 61.7267, 63.7917, 65.6432, 68.9833, 72.2615, 76.0595, 78.6923, 80.8311, 82.6559, 84.2737, 85.7724, 87.3985, 88.8369, 90.2960, 91.8941, 93.4291, 95.0460, 96.6950, 98.7423, 100.8446, 103.2022, 106.5643, 108.7319, 111.6787, 113.4849, 115.6922, 120.1319, 122.0449, 125.9195, 128.6768, 133.4345, 135.9679, 139.9386),
        8: (74.9289, 80.1772, 83.3162, 86.0555, 88.4141, 90.7278, 95.2001, 98.7031, 102.8014, 105.9333, 108.3262, 110.4552, 112.3566, 114.2002, 115.9495, 117.6113, 119.3606, 121.2379, 123.0256, 124.9409, 127.0501, 129.0894, 131.5607, 134.4329, 138.1014, 140.5203, 144.0081, 146.1474, 149.3861, 154.1343, 155.6028, 159.5052, 165.2994, 171.2425, 175.4131, 184.1383),
        9: (105.5698, 108.7100, 110.5721, 113.0232, 116.4724, 119.7765, 124.7326, 128.7292, 133.3916, 136.6555, 139.4303, 141.7986, 143.9908, 145.9956, 148.0665, 150.1445, 151.9778, 154.0006, 156.0728, 158.0397, 160.2326, 162.7626, 165.4745, 168.7997, 173.1349, 175.8542, 179.2707, 181.3071, 184.8151, 190.2107, 191.5313, 196.8408, 200.5907, 207.3751, 213.5427, 223.6864),
        10: (131.9161, 137.9073, 141.9057, 145.8574, 148.8683, 152.4660, 158.1079, 162.7291, 168.5485, 172.2832, 175.3040, 177.9576, 180.3724, 182.8037, 185.1021, 187.2606, 189.3300, 191.5889, 193.6820, 195.9307, 198.2890, 200.9231, 203.8339, 207.2905, 211.6907, 214.8118, 218.5839, 221.1785, 224.7469, 231.2073, 232.3202, 238.3887, 242.9075, 248.8748, 251.2994, 257.4144),
        11: (169.4849, 174.8778, 179.6280, 182.9247, 185.8078, 189.9328, 195.9555, 201.4941, 207.4976, 211.7138, 215.1148, 218.0461, 220.8295, 223.1809, 225.4595, 227.7479, 230.0266, 232.4113, 234.8820, 237.3913, 240.2970, 243.2524, 246.6244, 250.4549, 255.3523, 258.5995, 263.0564, 265.5478, 269.7564, 276.0821, 278.1168, 282.5603, 286.4233, 292.5470, 295.9253, 315.7045),
        12: (207.3045, 214.7941, 217.7792, 220.3022, 223.4879, 228.6142, 236.5406, 242.3416, 249.4914, 254.4152, 258.0804, 261.4699, 264.5877, 267.5176, 270.1679, 272.6017, 275.1342, 277.7865, 280.4432, 283.2323, 286.4223, 289.5932, 293.3844, 297.4918, 303.0244, 306.1987, 310.4228, 313.5706, 317.6402, 323.5052, 325.6871, 331.1831, 336.8096, 342.2863, 347.9017, 362.1499),
    },
    'rconst': {
        1: (0.2154, 0.2941, 0.3545, 0.4442, 0.5155, 0.5854, 0.7778, 0.9980, 1.3390, 1.6278, 1.8955, 2.1621, 2.3943, 2.6442, 2.9094, 3.1757, 3.4457, 3.7632, 4.0954, 4.4558, 4.8621, 5.3118, 5.8737, 6.5810, 7.5537, 8.2699, 9.2725, 9.9462, 10.9264, 12.5646, 13.0302, 14.5087, 15.5874, 17.2726, 19.4267, 21.9028),
        2: (2.8304, 3.0452, 3.3223, 3.8090, 4.1044, 4.5943, 5.3801, 6.1104, 7.0197, 7.7067, 8.2966, 8.8669, 9.4178, 9.9254, 10.4432, 10.9447, 11.4681, 12.0310, 12.5694, 13.1588, 13.8316, 14.5768, 15.5108, 16.4905, 17.8970, 18.8599, 20.3225, 21.3191, 22.4542, 24.3926, 25.0437, 26.9822, 28.8460, 30.9875, 32.7218, 36.6404),
        3: (8.2577, 9.4290, 10.0133, 10.9405, 11.6759, 12.4661, 13.8496, 15.1777, 16.7864, 17.9026, 18.9048, 19.7724, 20.5589, 21.3023, 22.0298, 22.7249, 23.4974, 24.2352, 25.0033, 25.8486, 26.7804, 27.8232, 28.9604, 30.3399, 32.2842, 33.5479, 35.1853, 36.3477, 37.9031, 40.5154, 41.3085, 43.7921, 45.9695, 48.3989, 49.5687, 53.7299),
        4: (17.7587, 19.1531, 20.1463, 21.7386, 22.9170, 24.3095, 26.4268, 28.2851, 30.5074, 32.0883, 33.4012, 34.5168, 35.5392, 36.5443, 37.5261, 38.4841, 39.4731, 40.4705, 41.5006, 42.5874, 43.7469, 44.9668, 46.4929, 48.2331, 50.5433, 52.0196, 54.0654, 55.4021, 57.2808, 60.1362, 61.2233, 64.4150, 67.6185, 70.5049, 73.8669, 78.1217),
        5: (31.8711, 33.7069, 35.2301, 37.1220, 38.4929, 40.1452, 42.8979, 45.4898, 48.1622, 50.1222, 51.8068, 53.2580, 54.6203, 55.8885, 57.1034, 58.3066, 59.4695, 60.6958, 61.9141, 63.2910, 64.7205, 66.2360, 67.9421, 70.0728, 72.7114, 74.5230, 77.1472, 78.7916, 80.8068, 84.1937, 85.3147, 88.0666, 90.6939, 95.5227, 97.5967, 104.7702),
        6: (50.4401, 52.2850, 53.7744, 55.6834, 58.1067, 60.2147, 63.4307, 66.4021, 69.8989, 72.4306, 74.3257, 76.0992, 77.6681, 79.2210, 80.6879, 82.1262, 83.4802, 84.9075, 86.3516, 87.8909, 89.5941, 91.3681, 93.4719, 95.9698, 99.0971, 101.1660, 104.0588, 105.7832, 108.2070, 112.2093, 113.5153, 117.1987, 120.7453, 125.5039, 128.6527, 134.5557),
        7: (71.8940, 75.4571, 77.3058, 80.1090, 81.7688, 83.7286, 88.1761, 91.6423, 95.5850, 98.4987, 100.7421, 102.8036, 104.6200, 106.3793, 107.9944, 109.6627, 111.2690, 112.9773, 114.6680, 116.5431, 118.3452, 120.6500, 122.9888, 125.7855, 129.6417, 131.7996, 135.0464, 137.2843, 140.1145, 144.9953, 146.7468, 151.3926, 156.6919, 162.5737, 164.9491, 166.5626),
        8: (95.2666, 100.4898, 103.7794, 106.6325, 109.2409, 111.9206, 116.5719, 121.0077, 125.7999, 129.0555, 131.6734, 133.8963, 135.8562, 137.7641, 139.8551, 141.6673, 143.4745, 145.2970, 147.2222, 149.2879, 151.5775, 153.8953, 156.4485, 159.4428, 163.5080, 166.0095, 169.6176, 172.0399, 175.0215, 179.9860, 181.5565, 185.0707, 189.7151, 196.1220, 199.2970, 209.2604),
        9: (128.7636, 132.4571, 135.7107, 138.3211, 141.5965, 144.2093, 149.2100, 153.9470, 159.0215, 162.9448, 166.1392, 168.6312, 170.9757, 173.1354, 175.4660, 177.4991, 179.6529, 181.6770, 183.8603, 186.1464, 188.4471, 191.1295, 194.1034, 197.6553, 201.9376, 204.4904, 208.6003, 211.1079, 214.7090, 220.4903, 222.3038, 227.5405, 232.0843, 237.2108, 240.3352, 251.6760),
        10: (157.5599, 163.0236, 166.2456, 171.9348, 175.2973, 179.9659, 185.8699, 190.7866, 197.0500, 201.1693, 204.2690, 207.3800, 209.9391, 212.3368, 214.7494, 217.0748, 219.4451, 221.7056, 224.0842, 226.4254, 229.0686, 232.1064, 235.3571, 239.3726, 244.0506, 247.3220, 251.5125, 254.2319, 257.8622, 263.9030, 265.7478, 271.3136, 276.1130, 280.8530, 283.4697, 294.3505),
        11: (193.5740, 204.0815, 206.1077, 211.7330, 215.5010, 219.3857, 225.8577, 231.9506, 238.1271, 242.7707, 246.4330, 249.8661, 252.7428, 255.3514, 258.1423, 260.7774, 263.3440, 265.9667, 268.3314, 271.0455, 274.0567, 277.3146, 280.8564, 284.9089, 289.9957, 293.4336, 298.0640, 301.4126, 305.9138, 311.5071, 313.1758, 319.3198, 324.2689, 329.8709, 335.4329, 340.3531),
        12: (240.8924, 247.0134, 253.1544, 256.9452, 259.6934, 264.1172, 270.6953, 276.8550, 283.7348, 289.1147, 292.8905, 296.7773, 300.0379, 302.8268, 305.7275, 308.4199, 311.2930, 314.0136, 316.8855, 319.8586, 323.0712, 326.3847, 330.4751, 334.7648, 340.9210, 344.8091, 349.8242, 353.2797, 357.9107, 363.9355, 365.8050, 371.0796, 378.1419, 389.2544, 394.5223, 408.5115),
    },
    'const': {
        1: (0.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0002, 0.0011, 0.0042, 0.0164, 0.0358, 0.0641, 0.0982, 0.1446, 0.2010, 0.2736, 0.3556, 0.4555, 0.5707, 0.7134, 0.8774, 1.0843, 1.3279, 1.6527, 2.0929, 2.7120, 3.1794, 3.8316, 4.3381, 5.0375, 6.4679, 6.8944, 8.2840, 9.5079, 11.5940, 12.8002, 14.6434),
        2: (1.1312, 1.4267, 1.5549, 1.8227, 2.0176, 2.2954, 2.7811, 3.3226, 4.0121, 4.5595, 5.0620, 5.5146, 5.9484, 6.3846, 6.8146, 7.2372, 7.7027, 8.1474, 8.6335, 9.1531, 9.7083, 10.3973, 11.1458, 12.0621, 13.4069, 14.3507, 15.3775, 16.1783, 17.3783, 19.3010, 19.9582, 21.3789, 23.2739, 24.9573, 26.6522, 32.2614),
        3: (5.9595, 6.7747, 7.2226, 8.0364, 8.4447, 9.1080, 10.3622, 11.4238, 12.7922, 13.8240, 14.6709, 15.4455, 16.1756, 16.8617, 17.5412, 18.1859, 18.8802, 19.6154, 20.3780, 21.1909, 22.0472, 23.0347, 24.1110, 25.4046, 27.1872, 28.3939, 30.0089, 31.1731, 32.7060, 35.2837, 35.9579, 38.0287, 40.2735, 43.4192, 44.1817, 47.5480),
        4: (14.5706, 15.5992, 16.4622, 17.8958, 18.9976, 20.0631, 22.0127, 23.6661, 25.6793, 27.1272, 28.3409, 29.4506, 30.4331, 31.3980, 32.3496, 33.2510, 34.1803, 35.1461, 36.0582, 37.0708, 38.1464, 39.3695, 40.8261, 42.5499, 44.7027, 46.0290, 48.0339, 49.3491, 51.0310, 53.7634, 54.5789, 57.5304, 60.7657, 63.4121, 67.2100, 71.7514),
        5: (26.7765, 29.3728, 30.2497, 32.0268, 33.3617, 34.9595, 37.4344, 39.7069, 42.3035, 44.2652, 45.7877, 47.1953, 48.4383, 49.6387, 50.7476, 51.8599, 52.9740, 54.1211, 55.3068, 56.5709, 57.8830, 59.3773, 61.0038, 63.0519, 65.5968, 67.2243, 69.6228, 71.2247, 73.1413, 76.6595, 77.6769, 81.1546, 83.8038, 87.9403, 90.8904, 93.7972),
        6: (43.9304, 46.3944, 48.0846, 50.2308, 52.1729, 54.3110, 57.2701, 60.0128, 63.2253, 65.5469, 67.5203, 69.2148, 70.6286, 72.0960, 73.5143, 74.8661, 76.1847, 77.5862, 78.9532, 80.4423, 81.9932, 83.7251, 85.6701, 87.9753, 90.9953, 93.0442, 95.7593, 97.6678, 99.8344, 103.4280, 104.6848, 108.2846, 112.0341, 118.0130, 119.6155, 127.6437),
        7: (64.2664, 68.5253, 70.8242, 73.3957, 75.5578, 77.8885, 81.1487, 84.3534, 88.2823, 90.9244, 93.1164, 95.0737, 96.7066, 98.4848, 100.1630, 101.6731, 103.2960, 104.9206, 106.4851, 108.1348, 110.0527, 112.2244, 114.3667, 117.0732, 120.3898, 122.7104, 125.7623, 127.7470, 130.5132, 134.6837, 136.5114, 140.7586, 144.7441, 148.7805, 154.3672, 159.8812),
        8: (89.6270, 94.3429, 96.1926, 100.0505, 101.8052, 104.9174, 109.0592, 112.4460, 116.9754, 120.1703, 122.6028, 124.6427, 126.7469, 128.7417, 130.5783, 132.2525, 134.0142, 135.8564, 137.7246, 139.7399, 141.8746, 144.1246, 146.5416, 149.5659, 153.5710, 155.9913, 159.3659, 161.5008, 164.3624, 169.5674, 171.0575, 175.1107, 179.8200, 183.5437, 186.4127, 195.3813),
        9: (120.2707, 124.7421, 125.7844, 128.2299, 131.8928, 135.1441, 140.4650, 144.3615, 149.5677, 153.1196, 156.0736, 158.4978, 160.7884, 163.1084, 165.2688, 167.2343, 169.0439, 171.0310, 173.1256, 175.4187, 177.7536, 180.2600, 183.3654, 186.7821, 191.0019, 193.7476, 197.6485, 199.9053, 203.2219, 208.6224, 210.1354, 214.6964, 220.2302, 225.1296, 228.9911, 241.4749),
        10: (153.0869, 157.3297, 158.7027, 162.5202, 165.6843, 169.4040, 174.8347, 180.1171, 186.3754, 190.4346, 193.6307, 196.6200, 199.2873, 201.4542, 203.7716, 206.0568, 208.1649, 210.4191, 212.6197, 214.9754, 217.5223, 220.2747, 223.7414, 227.5950, 232.3086, 235.4409, 239.8457, 242.7203, 245.9319, 252.4178, 254.1756, 257.8774, 261.6700, 268.0082, 275.5605, 285.3262),
        11: (188.6777, 195.1407, 197.1404, 200.8582, 204.1441, 208.6508, 215.4228, 221.1892, 227.4860, 231.8323, 235.4700, 238.3317, 241.0962, 243.6465, 246.0770, 248.4904, 251.0193, 253.3947, 255.8684, 258.6544, 261.5450, 264.6683, 268.1243, 272.2243, 277.2955, 280.5238, 285.5707, 288.3246, 291.6173, 297.8043, 299.5985, 304.9045, 311.0284, 319.2244, 324.6607, 338.1787),
        12: (220.8043, 230.3675, 235.8870, 241.7819, 247.6548, 252.5001, 258.9693, 264.3999, 271.6290, 276.2160, 280.4332, 283.9507, 286.9134, 289.6808, 292.4736, 295.2328, 297.9150, 300.5955, 303.2286, 306.1167, 309.0349, 312.4699, 316.2965, 320.5742, 326.2469, 329.9512, 335.2472, 338.4923, 342.9646, 349.9268, 351.7888, 357.4612, 362.2186, 369.4022, 376.0421, 390.6968),
    },
    'rtrend': {
        1: (0.7327, 0.8513, 0.9846, 1.1456, 1.3150, 1.5278, 1.9163, 2.2837, 2.7926, 3.2147, 3.5857, 3.9418, 4.3053, 4.6395, 4.9747, 5.3165, 5.6873, 6.0800, 6.4771, 6.9312, 7.4512, 8.0391, 8.7089, 9.5975, 10.7809, 11.5677, 12.7050, 13.4818, 14.3979, 16.2116, 16.8222, 18.3875, 19.8952, 21.5690, 22.8115, 25.5817),
        2: (5.0325, 5.5027, 5.7845, 6.4666, 6.9203, 7.4928, 8.4114, 9.3407, 10.4757, 11.4093, 12.1445, 12.8485, 13.5136, 14.1097, 14.7117, 15.3144, 15.9237, 16.5452, 17.2155, 17.9097, 18.6821, 19.5526, 20.4986, 21.7784, 23.3985, 24.4640, 25.9759, 26.9817, 28.2901, 30.3000, 30.9963, 32.8147, 35.0652, 37.6673, 39.7019, 41.6343),
        3: (12.0409, 13.9514, 14.5754, 15.4386, 16.2607, 17.3938, 19.1066, 20.6043, 22.4717, 23.7294, 24.8028, 25.7888, 26.7482, 27.6346, 28.4762, 29.3360, 30.1623, 31.0196, 31.9163, 32.8500, 33.8818, 35.0324, 36.3073, 37.8804, 39.9978, 41.3313, 43.2661, 44.7351, 46.3268, 49.0362, 50.0435, 52.8882, 55.4921, 57.7264, 59.3009, 64.9051),
        4: (23.8232, 25.6454, 27.4803, 28.6565, 29.9575, 31.4822, 33.7366, 35.7331, 38.1902, 39.8939, 41.4006, 42.6396, 43.8587, 44.9013, 46.0165, 47.0900, 48.1631, 49.2731, 50.3572, 51.5304, 52.7969, 54.2144, 55.7756, 57.6508, 60.1160, 61.7024, 63.9333, 65.3122, 67.3305, 70.3734, 71.4664, 74.7194, 77.7295, 80.9472, 82.5558, 88.4156),
        5: (40.5911, 43.4692, 44.2907, 46.4151, 47.7065, 49.5183, 52.3543, 54.8192, 57.9940, 60.1311, 61.8429, 63.4031, 64.8375, 66.1560, 67.4241, 68.7667, 70.0748, 71.4075, 72.6386, 74.0273, 75.5916, 77.2483, 79.2337, 81.3703, 84.2175, 86.1092, 88.7520, 90.4011, 92.7728, 96.4827, 97.5798, 101.1653, 104.9418, 109.6462, 112.3786, 114.9224),
        6: (60.6216, 63.9755, 65.1459, 67.0903, 69.3070, 71.6114, 75.0455, 78.1788, 81.8974, 84.4907, 86.5963, 88.4766, 90.0943, 91.6762, 93.2282, 94.6731, 96.1583, 97.5993, 99.1872, 100.8654, 102.5368, 104.4621, 106.6852, 109.2590, 112.5569, 114.9381, 117.7482, 119.4605, 122.1923, 126.5645, 127.8134, 131.4441, 135.5361, 139.3787, 141.7666, 149.7210),
        7: (85.9033, 87.2955, 89.6127, 93.6356, 95.3423, 97.8047, 101.6845, 105.4750, 109.7380, 112.6201, 115.1121, 117.4754, 119.4823, 121.2380, 122.8858, 124.6540, 126.3291, 127.9991, 129.7850, 131.5692, 133.5182, 135.6326, 138.0433, 141.0746, 144.7981, 147.1696, 150.2807, 152.3905, 155.1708, 160.0219, 161.1009, 165.8074, 168.5823, 173.0601, 179.7888, 188.0148),
        8: (110.2794, 115.7305, 118.2214, 121.3423, 124.0705, 127.5815, 132.0402, 136.3130, 141.2422, 144.8532, 147.6323, 150.0869, 152.2116, 154.2902, 156.2715, 158.1821, 160.1468, 162.0960, 163.9436, 165.9919, 168.3968, 170.8722, 173.4902, 176.8448, 181.0996, 183.8379, 187.1234, 189.2649, 192.7786, 198.3448, 199.8488, 204.6456, 209.7247, 212.8726, 215.5585, 219.5107),
        9: (143.5824, 147.7797, 150.4250, 154.6441, 158.0591, 161.5916, 166.9908, 171.3841, 177.1255, 181.0517, 184.3338, 187.0121, 189.3607, 191.6862, 193.8808, 196.1392, 198.3003, 200.3253, 202.5902, 204.7962, 207.2165, 210.1117, 213.2971, 216.8700, 221.2744, 224.5655, 228.3397, 230.8491, 234.4646, 239.9394, 241.1995, 246.3544, 252.2113, 258.1432, 262.6215, 273.5907),
        10: (176.3820, 181.2782, 184.8727, 191.0842, 194.6280, 198.7845, 205.4617, 210.7288, 216.9267, 221.2017, 224.5182, 227.7617, 230.3883, 233.0690, 235.5342, 238.0431, 240.3500, 242.7011, 245.0818, 247.6460, 250.3703, 253.4971, 256.6024, 260.4711, 265.3737, 268.6762, 272.9633, 275.5053, 279.4577, 284.9803, 287.3229, 293.4337, 298.8414, 305.2605, 307.8355, 314.3216),
        11: (219.9287, 223.4774, 227.1804, 232.9319, 237.7141, 242.0619, 248.4248, 254.0782, 260.9817, 265.3799, 269.0047, 272.1499, 275.3516, 278.2656, 280.9638, 283.6130, 286.3217, 289.1392, 291.7420, 294.3455, 297.2803, 300.6817, 304.2455, 308.3267, 313.5070, 317.2774, 322.4644, 325.5274, 329.7585, 336.7490, 338.4723, 343.9993, 351.6205, 357.4761, 363.9023, 380.8373),
        12: (265.6843, 271.1398, 273.8049, 279.1842, 282.9622, 287.3471, 295.4425, 301.6295, 308.4246, 313.9389, 317.8221, 321.2331, 324.6367, 327.3195, 330.2941, 333.0254, 335.8653, 338.6981, 341.6417, 344.7511, 348.1030, 351.6107, 355.4353, 359.9233, 365.5725, 369.4734, 374.6311, 377.6807, 382.6104, 389.6694, 391.7907, 397.3350, 403.7531, 412.6805, 415.7256, 427.2549),
    },
    'trend': {
        1: (0.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0001, 0.0009, 0.0037, 0.0153, 0.0343, 0.0642, 0.1006, 0.1487, 0.2066, 0.2782, 0.3591, 0.4559, 0.5706, 0.7110, 0.8768, 1.0901, 1.3360, 1.6427, 2.0755, 2.7199, 3.2001, 3.8332, 4.3567, 5.0981, 6.3499, 6.7720, 7.9570, 9.2220, 10.3410, 12.2206, 15.8808),
        2: (1.9055, 2.2362, 2.4389, 2.7210, 3.0899, 3.4381, 4.0718, 4.7191, 5.5689, 6.2002, 6.7721, 7.3041, 7.8049, 8.3038, 8.7639, 9.2416, 9.7354, 10.2595, 10.8256, 11.3979, 12.0555, 12.7989, 13.6423, 14.6704, 16.1068, 17.0259, 18.3233, 19.0831, 20.3232, 22.2214, 22.9483, 25.0122, 27.0513, 29.8510, 31.3893, 36.4193),
        3: (8.1301, 9.3008, 9.7323, 10.4574, 11.0089, 11.9686, 13.4230, 14.7620, 16.2586, 17.4330, 18.4280, 19.2892, 20.1364, 20.9130, 21.6335, 22.4073, 23.1451, 23.9004, 24.6727, 25.5391, 26.5063, 27.5530, 28.7542, 30.1621, 32.0340, 33.2670, 34.9901, 36.0859, 37.6175, 39.9555, 40.7184, 43.5634, 45.8966, 49.0389, 51.4420, 57.9895),
        4: (18.9239, 20.5170, 21.4331, 22.7504, 23.8123, 25.1153, 26.9893, 28.9310, 31.2574, 32.8546, 34.1749, 35.3677, 36.4817, 37.4979, 38.5095, 39.4402, 40.4283, 41.4657, 42.5702, 43.6816, 44.8449, 46.1650, 47.5460, 49.3584, 51.7526, 53.2105, 55.4027, 56.8349, 58.8287, 61.5872, 62.4825, 64.8513, 67.5729, 70.5248, 73.6595, 80.8676),
        5: (34.1222, 36.2892, 37.5462, 39.4196, 40.7490, 42.4624, 44.7202, 47.1059, 50.0974, 52.1758, 53.8442, 55.2966, 56.6412, 57.9321, 59.1292, 60.3689, 61.5743, 62.7666, 64.1293, 65.4248, 66.8716, 68.4534, 70.3226, 72.5685, 75.3520, 77.0482, 79.3120, 80.9190, 82.8907, 86.5882, 87.6527, 90.3751, 94.0561, 98.6993, 102.2570, 111.5097),
        6: (53.8357, 55.7246, 57.1411, 59.2217, 61.2093, 63.3657, 66.3974, 69.4008, 72.9409, 75.4660, 77.5964, 79.2625, 80.9489, 82.4781, 83.9128, 85.3060, 86.7031, 88.2172, 89.7526, 91.2402, 93.0022, 94.8539, 96.9005, 99.3783, 102.7009, 104.9216, 107.8379, 109.6870, 112.1312, 115.8076, 116.9607, 120.6757, 124.9044, 129.6290, 132.5905, 138.6386),
        7: (73.6736, 78.3110, 80.5347, 83.3925, 85.8413, 88.1833, 92.3213, 95.5584, 99.8901, 102.7972, 105.0609, 107.1367, 109.0322, 110.8099, 112.4514, 114.1256, 115.7485, 117.5197, 119.2132, 120.9576, 122.8630, 124.7934, 127.2515, 129.8548, 133.7235, 135.9687, 139.3586, 141.3054, 144.2272, 149.0212, 150.0658, 153.9902, 157.9749, 161.3021, 163.9865, 173.5530),
        8: (103.0270, 105.4407, 107.4638, 111.1876, 114.1044, 116.5654, 121.3586, 125.7190, 130.8672, 134.2586, 136.8277, 139.2066, 141.3432, 143.2776, 145.1866, 147.1147, 148.8519, 150.9518, 152.8691, 154.8818, 156.7965, 159.1123, 161.6649, 164.7345, 168.6476, 171.4753, 174.8618, 177.1509, 180.4820, 185.0910, 186.3731, 191.2990, 196.0673, 203.0933, 206.8785, 214.4832),
        9: (136.4961, 138.0366, 139.1492, 143.2939, 145.8376, 149.7789, 155.1591, 159.7797, 165.4797, 169.2151, 172.3792, 175.2211, 177.3980, 179.5498, 181.8384, 183.9106, 185.8330, 187.9246, 190.2102, 192.5003, 194.9732, 197.7972, 200.7691, 204.1752, 208.5179, 211.4774, 215.2479, 217.8275, 221.0828, 226.5005, 228.6506, 234.6344, 238.1283, 244.5236, 249.3235, 265.7325),
        10: (168.0363, 173.0274, 176.3359, 180.8069, 183.6319, 186.6951, 192.9026, 198.1627, 203.9650, 208.2521, 211.6579, 214.3534, 216.9764, 219.3577, 221.6806, 224.2277, 226.6213, 228.9008, 231.5092, 233.8995, 236.5045, 239.4027, 242.7073, 246.3660, 251.1917, 254.7526, 258.8712, 261.3508, 264.6268, 270.5951, 271.9463, 276.6420, 282.1122, 286.1260, 292.6916, 297.8753),
        11: (200.6977, 211.7877, 216.7340, 220.5059, 223.2829, 227.9383, 234.2383, 239.9937, 246.4350, 251.4735, 255.1477, 258.5091, 261.3607, 263.9628, 266.4306, 268.8330, 271.4768, 274.1255, 276.7330, 279.5836, 282.5204, 285.5119, 289.1862, 293.2087, 298.3359, 301.9340, 306.4113, 309.7654, 313.6153, 319.8469, 321.5859, 326.6887, 333.9074, 339.7601, 344.0307, 355.1171),
        12: (249.4939, 257.5213, 258.9362, 267.8008, 270.9130, 274.3240, 280.0491, 286.6602, 293.9874, 298.7491, 302.9446, 306.2521, 309.3294, 312.3284, 315.0487, 317.8786, 320.6473, 323.1989, 325.8711, 328.7724, 331.8729, 335.4378, 339.1304, 343.4035, 348.8907, 352.7574, 357.4057, 360.3242, 365.3111, 372.5046, 375.5230, 381.9656, 388.9251, 393.6095, 402.7402, 410.2686),
    },
}

MAXEIG_Q = {
    'none': {
        1: (0.0000, 0.0000, 0.0000, 0.0000, 0.0001, 0.0002, 0.0014, 0.0053, 0.0221, 0.0526, 0.0948, 0.1475, 0.2125, 0.2904, 0.3787, 0.4846, 0.5992, 0.7330, 0.8946, 1.0739, 1.2891, 1.5420, 1.8685, 2.3397, 2.9799, 3.4715, 4.0948, 4.6135, 5.3131, 6.5798, 7.0375, 8.2079, 9.2791, 10.7960, 11.9511, 13.9368),
        2: (0.5017, 0.5805, 0.6518, 0.7772, 0.9205, 1.0653, 1.3870, 1.7208, 2.1709, 2.5506, 2.8866, 3.2218, 3.5428, 3.8620, 4.1851, 4.4958, 4.8322, 5.1755, 5.5506, 5.9490, 6.3971, 6.9239, 7.5999, 8.3648, 9.4584, 10.2489, 11.2558, 11.9788, 12.8762, 14.4176, 14.9069, 16.4901, 18.3075, 20.6462, 22.6013, 28.7009),
        3: (2.2317, 2.3782, 2.6420, 3.0994, 3.4256, 3.8051, 4.4713, 5.0808, 5.9417, 6.5690, 7.1086, 7.5947, 8.0281, 8.4582, 8.9021, 9.3537, 9.8039, 10.2754, 10.8006, 11.3584, 11.9257, 12.6099, 13.3702, 14.3523, 15.6608, 16.5254, 17.7673, 18.5703, 19.6286, 21.3860, 21.9910, 23.8668, 25.3758, 27.1265, 29.4315, 32.0121),
        4: (4.8976, 5.5297, 5.7231, 6.3072, 6.8721, 7.4104, 8.3356, 9.2039, 10.2604, 11.0690, 11.7552, 12.3462, 12.9245, 13.4699, 13.9982, 14.5224, 15.0620, 15.6357, 16.2266, 16.8240, 17.5107, 18.2823, 19.1718, 20.2327, 21.6606, 22.6466, 24.0723, 25.0006, 26.1046, 28.3921, 29.0211, 31.0445, 33.0663, 35.0229, 37.0852, 41.7454),
        5: (8.1507, 8.7882, 9.2168, 10.0634, 10.7244, 11.5388, 12.6470, 13.7247, 14.9617, 15.8483, 16.6225, 17.3044, 17.9729, 18.5617, 19.1707, 19.7962, 20.4046, 21.0083, 21.6874, 22.3814, 23.1541, 24.0296, 25.0096, 26.2010, 27.8602, 28.9432, 30.3297, 31.4413, 32.7789, 34.8283, 35.3989, 37.4939, 39.3692, 41.3880, 43.6969, 51.7854),
        6: (12.1819, 12.8347, 13.1769, 14.2665, 14.9552, 15.7439, 17.1464, 18.2995, 19.7964, 20.8248, 21.7207, 22.5040, 23.1738, 23.8854, 24.5543, 25.2283, 25.9040, 26.5942, 27.3611, 28.1503, 29.0159, 29.8971, 30.9870, 32.2817, 34.0194, 35.2006, 36.7133, 37.8158, 39.3888, 41.6432, 42.2494, 44.3666, 46.6909, 50.2920, 52.3444, 54.2642),
        7: (16.7200, 17.8609, 18.3639, 18.8074, 19.4896, 20.2993, 21.6320, 22.9599, 24.5985, 25.7402, 26.6759, 27.5519, 28.3797, 29.1768, 29.8915, 30.5730, 31.3091, 32.0087, 32.7351, 33.5867, 34.4444, 35.4394, 36.6083, 38.0312, 39.7105, 40.8729, 42.5950, 43.7378, 45.3135, 47.8178, 48.4720, 51.5713, 54.9086, 57.5776, 58.6798, 58.6798),
        8: (19.5323, 21.1979, 22.1438, 22.9317, 23.9669, 25.0746, 26.6321, 27.9652, 29.7530, 30.9809, 32.0044, 32.8341, 33.6518, 34.4429, 35.2323, 36.0075, 36.7261, 37.5450, 38.4064, 39.3137, 40.3261, 41.4099, 42.6192, 44.0603, 46.0372, 47.3888, 49.2386, 50.2730, 51.7576, 54.6238, 55.0757, 57.0832, 60.0361, 62.9748, 64.2871, 65.6634),
        9: (25.6012, 25.7421, 26.6373, 27.7966, 29.0250, 30.0338, 31.5273, 32.9885, 34.6503, 36.0104, 37.0734, 38.0260, 38.9246, 39.7554, 40.6017, 41.4594, 42.2964, 43.1515, 44.0633, 44.9823, 46.0050, 47.1245, 48.3030, 49.8363, 51.7287, 52.8787, 54.6503, 56.0245, 57.5351, 60.1656, 60.9892, 63.6714, 65.4134, 70.0015, 71.5382, 79.1101),
        10: (27.5547, 29.4792, 30.8991, 32.3203, 33.5702, 34.9108, 36.4905, 38.1665, 40.0080, 41.4252, 42.5396, 43.4850, 44.4080, 45.2712, 46.1173, 46.9854, 47.8429, 48.7000, 49.6219, 50.5993, 51.7072, 52.7757, 54.0947, 55.6853, 57.6118, 58.9026, 60.6346, 61.9437, 63.5994, 65.7864, 66.6939, 69.7292, 71.7286, 73.6195, 74.5300, 84.6134),
        11: (33.8780, 35.4422, 36.2243, 37.4508, 38.5136, 39.7381, 41.6334, 43.2526, 45.1363, 46.6408, 47.7842, 48.8511, 49.8049, 50.7896, 51.7026, 52.5224, 53.3992, 54.2946, 55.2734, 56.2960, 57.3218, 58.5400, 59.9216, 61.5407, 63.4782, 64.9886, 67.0302, 68.3085, 70.0877, 72.4237, 73.4710, 75.1761, 78.1525, 81.2748, 83.3735, 85.7370),
        12: (36.2568, 39.5219, 40.2548, 41.2145, 42.7057, 44.0101, 46.2440, 48.0877, 50.2325, 51.7595, 53.0103, 54.1479, 55.1776, 56.0808, 57.0199, 57.9443, 58.9386, 59.8870, 60.8630, 61.9636, 63.2105, 64.4812, 65.8617, 67.5192, 69.7988, 71.2215, 73.0807, 74.4374, 76.7562, 79.6462, 80.5385, 83.0967, 85.5704, 89.2760, 92.5169, 93.3114),
    },
    'rconst': {
        1: (0.2154, 0.2941, 0.3545, 0.4442, 0.5155, 0.5854, 0.7778, 0.9980, 1.3390, 1.6278, 1.8955, 2.1621, 2.3943, 2.6442, 2.9094, 3.1757, 3.4457, 3.7632, 4.0954, 4.4558, 4.8621, 5.3118, 5.8737, 6.5810, 7.5537, 8.2699, 9.2725, 9.9462, 10.9264, 12.5646, 13.0302, 14.5087, 15.5874, 17.2726, 19.4267, 21.9028),
        2: (1.7461, 1.9342, 2.1043, 2.4668, 2.7605, 3.1079, 3.6558, 4.1849, 4.9079, 5.4394, 5.9059, 6.3438, 6.7688, 7.1576, 7.5500, 7.9717, 8.3970, 8.8545, 9.3150, 9.8291, 10.3801, 10.9852, 11.7214, 12.6320, 13.8616, 14.6570, 15.8648, 16.7092, 18.0242, 19.6763, 20.2108, 21.8626, 23.4809, 24.9825, 26.3406, 28.8230),
        3: (4.3660, 4.8488, 5.0981, 5.5086, 5.9795, 6.5518, 7.3010, 8.1645, 9.1130, 9.8555, 10.5053, 11.1067, 11.6172, 12.1082, 12.6037, 13.0926, 13.6075, 14.1574, 14.7272, 15.3313, 16.0248, 16.7573, 17.6345, 18.7147, 20.0912, 21.0904, 22.4304, 23.2447, 24.5137, 26.5605, 27.1414, 29.0384, 30.9346, 33.3119, 35.3876, 39.1233),
        4: (7.1852, 7.9422, 8.5054, 9.0433, 9.6950, 10.4132, 11.4182, 12.4349, 13.6578, 14.5010, 15.2669, 15.9452, 16.5592, 17.1768, 17.7563, 18.3524, 18.9646, 19.5699, 20.2216, 20.8885, 21.6178, 22.4178, 23.4049, 24.5433, 26.1040, 27.1643, 28.5414, 29.5795, 30.9834, 33.4197, 33.9977, 35.8843, 37.8910, 41.3331, 44.6958, 50.4278),
        5: (10.8053, 11.6789, 12.2215, 13.0359, 13.8594, 14.6521, 15.8731, 16.9634, 18.4182, 19.4604, 20.2737, 20.9811, 21.6500, 22.3214, 22.9766, 23.6364, 24.3250, 24.9891, 25.7064, 26.4459, 27.2783, 28.1673, 29.2184, 30.4766, 32.1395, 33.1893, 34.7281, 35.7833, 37.2255, 39.6287, 40.4149, 42.2591, 44.3455, 46.8702, 48.9541, 51.0721),
        6: (14.4960, 16.1998, 16.7409, 17.3920, 18.1295, 19.0128, 20.4279, 21.7300, 23.3299, 24.4386, 25.3276, 26.1646, 26.9568, 27.6329, 28.3402, 29.0234, 29.7204, 30.4800, 31.2830, 32.0605, 32.9311, 33.9927, 35.0924, 36.4431, 38.1735, 39.4458, 41.1940, 42.2444, 43.6470, 46.0073, 46.7592, 48.9565, 50.8550, 53.4034, 55.8494, 59.9876),
        7: (19.3486, 19.9299, 20.8872, 21.8973, 22.6319, 23.5668, 25.0073, 26.5339, 28.2990, 29.5219, 30.4930, 31.3940, 32.1908, 32.9775, 33.7303, 34.4662, 35.2980, 36.0236, 36.8097, 37.6781, 38.6521, 39.6502, 40.8252, 42.2948, 44.1879, 45.4702, 47.0616, 48.3177, 49.8682, 52.5265, 53.3557, 55.7651, 57.7236, 60.5382, 63.1556, 67.1774),
        8: (22.3586, 24.7654, 25.3510, 26.4469, 27.3906, 28.4324, 30.0511, 31.4355, 33.3423, 34.6175, 35.6355, 36.6118, 37.4554, 38.2835, 39.0696, 39.8771, 40.6967, 41.5043, 42.3624, 43.2973, 44.3012, 45.4556, 46.8728, 48.3797, 50.3577, 51.5916, 53.3334, 54.6467, 56.0663, 58.5870, 59.4421, 62.6150, 65.6704, 68.5284, 70.3669, 80.6798),
        9: (27.3846, 29.3626, 30.2088, 31.3704, 32.5610, 33.5735, 35.0419, 36.7511, 38.4985, 39.8792, 40.9867, 42.0091, 42.8934, 43.7380, 44.5201, 45.3777, 46.2397, 47.1070, 48.0321, 49.0328, 50.1215, 51.1851, 52.4000, 54.0426, 56.0288, 57.4527, 59.3128, 60.3469, 61.9813, 64.6122, 65.4817, 68.1998, 71.0808, 74.0610, 76.5395, 80.5833),
        10: (32.6040, 33.8691, 34.6821, 35.7352, 36.8552, 38.2006, 40.0465, 41.8920, 43.8824, 45.2400, 46.3611, 47.4066, 48.3826, 49.2863, 50.1703, 50.9235, 51.7437, 52.6821, 53.5662, 54.6180, 55.7095, 56.8942, 58.1890, 59.8505, 62.0451, 63.3843, 65.2710, 66.6148, 68.2789, 71.1183, 72.0216, 75.1181, 78.6814, 82.3758, 84.5606, 86.9729),
        11: (37.4207, 37.8422, 39.0119, 40.2645, 41.5167, 42.9406, 45.0897, 46.8119, 48.8915, 50.3062, 51.5401, 52.6595, 53.6677, 54.5787, 55.5637, 56.4685, 57.3563, 58.3473, 59.2762, 60.2916, 61.4273, 62.6551, 64.0116, 65.6955, 67.9747, 69.4162, 71.3321, 72.7801, 74.3149, 77.2553, 78.0994, 82.0522, 85.8047, 88.7539, 90.6502, 97.1830),
        12: (41.5997, 43.4165, 44.1418, 45.6530, 46.6818, 48.0723, 50.0292, 51.9762, 54.2214, 55.7850, 56.9850, 58.1480, 59.1443, 60.1343, 61.0934, 62.0914, 63.0703, 64.0220, 65.0635, 66.1509, 67.2600, 68.5968, 70.0171, 71.7405, 73.8749, 75.4818, 77.5843, 79.1591, 80.7748, 84.0021, 85.1061, 87.5402, 90.8632, 94.7301, 95.6188, 99.3561),
    },
    'const': {
        1: (0.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0002, 0.0011, 0.0042, 0.0164, 0.0358, 0.0641, 0.0982, 0.1446, 0.2010, 0.2736, 0.3556, 0.4555, 0.5707, 0.7134, 0.8774, 1.0843, 1.3279, 1.6527, 2.0929, 2.7120, 3.1794, 3.8316, 4.3381, 5.0375, 6.4679, 6.8944, 8.2840, 9.5079, 11.5940, 12.8002, 14.6434),
        2: (1.0719, 1.2755, 1.3440, 1.5933, 1.8011, 2.0422, 2.4565, 2.9430, 3.5729, 4.0679, 4.5042, 4.9084, 5.3095, 5.7000, 6.0912, 6.5010, 6.9031, 7.3279, 7.7853, 8.2633, 8.8320, 9.4390, 10.1701, 11.0422, 12.2061, 13.0772, 14.1908, 14.8938, 16.0160, 17.8070, 18.4653, 20.1312, 21.5073, 23.3219, 24.4129, 26.5618),
        3: (3.4757, 3.9548, 4.3081, 4.7478, 5.1430, 5.5872, 6.2774, 7.0933, 8.0348, 8.7913, 9.4069, 9.9705, 10.4872, 10.9839, 11.4823, 11.9603, 12.4724, 13.0292, 13.5873, 14.1662, 14.8391, 15.5912, 16.4689, 17.5630, 18.9328, 19.8743, 21.2448, 22.1563, 23.4634, 25.5205, 26.1561, 28.1051, 29.7860, 32.1242, 33.8117, 38.4521),
        4: (5.8133, 7.2157, 7.6336, 8.4278, 9.0151, 9.5971, 10.6184, 11.5430, 12.6960, 13.5836, 14.3391, 14.9912, 15.6459, 16.2558, 16.8550, 17.4271, 18.0127, 18.6541, 19.2967, 19.9287, 20.6707, 21.5032, 22.4621, 23.6569, 25.1571, 26.1730, 27.5122, 28.4778, 29.7015, 32.2442, 32.9118, 34.9353, 37.2003, 40.2710, 42.9277, 46.3392),
        5: (9.6496, 10.6005, 11.3102, 12.2022, 12.8560, 13.7717, 14.9480, 16.1094, 17.5024, 18.4942, 19.2906, 20.0969, 20.7881, 21.4506, 22.0790, 22.6994, 23.3465, 24.0050, 24.7033, 25.4761, 26.2912, 27.1671, 28.1771, 29.4769, 31.1770, 32.3047, 33.8242, 34.7933, 36.3054, 38.6006, 39.2758, 41.3071, 42.9770, 46.0934, 48.3046, 56.3497),
        6: (14.3256, 15.4122, 15.8713, 16.7174, 17.4993, 18.2444, 19.6684, 20.8674, 22.4384, 23.5655, 24.4776, 25.3268, 26.0683, 26.7931, 27.4691, 28.1574, 28.8587, 29.5757, 30.3135, 31.1132, 31.9894, 32.9537, 34.0853, 35.4279, 37.2321, 38.4500, 40.1057, 41.2836, 42.8136, 45.4379, 46.2544, 48.7935, 51.6107, 54.4080, 56.1221, 61.2364),
        7: (18.4986, 19.5750, 20.2898, 21.6209, 22.1253, 22.9766, 24.3922, 25.8247, 27.4123, 28.6841, 29.6975, 30.5214, 31.3735, 32.1497, 32.8909, 33.5791, 34.3386, 35.0987, 35.8994, 36.7725, 37.6941, 38.7643, 40.0274, 41.4649, 43.2511, 44.4715, 46.3667, 47.3105, 49.0609, 51.9505, 52.8981, 55.3561, 57.7818, 59.8977, 61.3648, 68.9175),
        8: (23.0158, 24.2052, 25.0384, 25.8189, 26.7867, 27.8141, 29.3541, 30.7872, 32.6170, 33.9990, 35.0298, 35.9276, 36.6963, 37.5473, 38.3649, 39.1400, 39.9007, 40.7309, 41.5441, 42.4236, 43.4466, 44.4876, 45.6595, 47.2098, 49.1096, 50.5187, 52.4444, 53.4337, 55.2223, 58.1370, 58.8955, 61.0618, 64.5711, 66.7007, 69.4210, 73.0303),
        9: (27.7876, 29.0373, 29.6031, 30.5078, 31.5944, 32.5838, 34.3183, 35.8073, 37.6615, 38.9426, 40.0692, 41.0486, 41.9851, 42.8665, 43.6896, 44.4917, 45.3184, 46.2228, 47.1650, 48.1111, 49.1302, 50.2992, 51.6832, 53.1159, 55.1809, 56.6806, 58.7422, 59.9634, 61.4935, 64.5048, 65.3479, 68.0938, 70.9723, 72.5316, 75.5105, 76.8348),
        10: (31.7946, 32.8616, 34.1413, 35.2261, 36.0621, 37.2628, 39.1513, 40.8767, 43.0446, 44.4635, 45.6595, 46.6370, 47.6046, 48.5290, 49.4429, 50.2636, 51.0980, 51.9376, 52.8517, 53.8552, 54.9103, 56.0370, 57.3170, 58.9412, 60.9642, 62.4172, 64.4724, 65.7600, 67.3481, 70.4879, 71.1587, 73.8230, 75.9618, 77.5672, 79.9539, 83.7904),
        11: (34.5053, 37.7923, 38.6089, 39.8786, 41.1035, 42.3247, 44.2661, 45.9727, 48.0632, 49.5078, 50.7995, 51.9104, 52.8427, 53.8217, 54.7772, 55.6795, 56.6167, 57.4880, 58.4391, 59.3648, 60.5061, 61.7137, 62.9573, 64.5378, 66.8617, 68.4402, 70.3506, 71.8109, 73.5264, 76.3745, 77.2034, 80.1152, 84.2129, 87.4745, 88.5902, 94.8663),
        12: (39.9790, 42.3257, 43.7391, 44.9779, 46.0406, 47.5044, 49.4109, 51.3312, 53.4335, 55.0292, 56.2507, 57.3712, 58.3865, 59.3023, 60.2561, 61.1905, 62.0889, 62.9578, 63.9712, 65.0482, 66.1681, 67.4396, 68.9659, 70.5458, 72.6862, 74.0254, 76.1237, 77.5936, 79.2031, 82.1434, 83.1371, 86.3187, 89.3984, 93.7538, 98.4149, 111.1570),
    },
    'rtrend': {
        1: (0.7327, 0.8513, 0.9846, 1.1456, 1.3150, 1.5278, 1.9163, 2.2837, 2.7926, 3.2147, 3.5857, 3.9418, 4.3053, 4.6395, 4.9747, 5.3165, 5.6873, 6.0800, 6.4771, 6.9312, 7.4512, 8.0391, 8.7089, 9.5975, 10.7809, 11.5677, 12.7050, 13.4818, 14.3979, 16.2116, 16.8222, 18.3875, 19.8952, 21.5690, 22.8115, 25.5817),
        2: (3.0042, 3.5435, 3.7643, 4.1056, 4.3702, 4.7927, 5.4426, 6.0920, 6.9679, 7.6473, 8.2301, 8.7461, 9.2295, 9.7127, 10.1982, 10.6924, 11.1827, 11.6589, 12.2172, 12.7612, 13.3617, 14.0432, 14.8641, 15.8948, 17.2359, 18.1594, 19.4505, 20.2823, 21.3632, 23.2198, 23.8672, 25.7244, 27.4910, 29.7643, 31.4488, 34.4004),
        3: (6.0545, 6.7466, 7.0628, 7.4734, 7.9523, 8.5452, 9.4710, 10.4046, 11.5589, 12.3853, 13.0821, 13.6986, 14.3358, 14.8832, 15.4630, 16.0415, 16.5969, 17.1495, 17.7500, 18.4085, 19.1392, 19.9753, 20.9304, 22.0881, 23.5756, 24.6287, 26.0125, 26.9709, 28.1719, 30.5043, 31.3576, 33.4458, 35.9898, 37.9785, 38.9402, 41.4324),
        4: (9.0775, 10.0296, 10.4014, 11.2366, 11.9302, 12.7270, 13.9072, 14.9148, 16.2262, 17.2085, 18.0181, 18.7315, 19.4230, 20.0839, 20.7013, 21.3410, 21.9773, 22.6037, 23.2838, 24.0041, 24.7743, 25.6373, 26.6518, 27.8658, 29.5053, 30.6233, 32.1978, 33.1824, 34.6690, 36.8094, 37.4270, 39.5272, 41.3601, 43.5135, 45.3179, 49.7285),
        5: (13.2597, 14.1141, 14.7166, 15.5790, 16.3245, 17.1220, 18.4135, 19.5871, 20.9991, 22.0727, 22.9489, 23.7567, 24.5103, 25.1983, 25.8595, 26.5524, 27.2845, 28.0101, 28.7296, 29.5236, 30.3994, 31.3279, 32.4432, 33.7457, 35.5229, 36.6854, 38.3312, 39.4107, 40.7458, 43.0665, 43.7900, 46.2355, 48.1163, 50.6962, 52.7521, 58.1546),
        6: (17.8443, 18.6133, 19.1827, 19.9625, 20.7065, 21.7052, 23.1396, 24.4602, 26.0426, 27.2743, 28.2237, 29.0968, 29.8647, 30.6103, 31.3572, 32.0690, 32.7966, 33.5203, 34.3030, 35.1799, 36.0659, 37.1212, 38.3028, 39.6919, 41.5744, 42.8159, 44.4837, 45.5353, 47.0872, 49.5733, 50.2539, 52.2703, 54.8557, 57.4864, 59.4746, 63.5354),
        7: (22.0133, 23.1857, 23.8607, 24.5871, 25.4574, 26.5799, 28.0174, 29.4689, 31.2349, 32.4588, 33.5047, 34.4017, 35.2432, 36.0180, 36.8150, 37.5882, 38.3011, 39.0452, 39.8915, 40.7070, 41.7268, 42.7786, 44.0017, 45.5348, 47.4838, 48.7188, 50.3491, 51.5183, 53.1863, 55.9898, 56.9481, 59.1699, 61.3829, 65.4923, 66.8881, 73.6197),
        8: (26.2471, 27.2949, 28.0461, 29.0010, 30.0578, 31.3517, 33.0888, 34.3917, 36.3123, 37.5716, 38.6363, 39.5874, 40.5159, 41.4170, 42.2220, 42.9817, 43.7939, 44.6278, 45.4486, 46.4126, 47.4018, 48.5496, 49.8093, 51.3248, 53.3771, 54.7413, 56.5727, 57.8086, 59.6384, 62.3953, 63.2592, 66.0990, 68.2753, 72.8838, 75.3103, 79.9499),
        9: (31.1688, 31.7818, 32.3137, 33.7014, 34.9774, 36.1541, 37.8682, 39.3976, 41.4234, 42.7735, 43.8739, 44.8833, 45.9145, 46.8790, 47.7332, 48.5764, 49.4671, 50.3325, 51.2158, 52.2577, 53.2196, 54.3576, 55.6606, 57.1594, 59.3048, 60.7317, 62.4489, 63.7614, 65.3055, 68.4906, 69.0801, 71.7317, 74.7605, 78.6505, 80.3988, 85.3325),
        10: (33.8719, 35.5098, 36.7348, 38.1937, 39.5960, 40.9845, 42.9195, 44.6412, 46.6231, 48.1241, 49.3339, 50.3617, 51.3529, 52.3094, 53.2622, 54.1128, 55.0090, 55.9546, 56.9159, 57.9966, 59.0522, 60.1606, 61.5213, 63.0160, 65.2294, 66.7024, 68.6808, 69.8864, 71.8274, 74.4283, 75.2457, 76.9868, 79.3490, 84.2953, 86.8094, 90.6749),
        11: (40.0666, 41.3026, 42.2098, 43.5917, 44.8063, 46.0579, 47.9998, 49.7333, 51.9316, 53.3930, 54.6969, 55.8194, 56.8462, 57.8025, 58.7266, 59.6754, 60.6243, 61.5844, 62.5693, 63.5684, 64.8192, 66.0770, 67.4508, 69.1746, 71.2669, 72.8403, 74.9265, 76.4666, 78.3194, 81.2573, 82.4115, 85.5640, 88.1055, 91.6014, 92.5767, 94.5768),
        12: (45.4743, 46.6228, 47.1380, 48.1338, 49.7229, 51.1307, 53.2692, 54.9208, 57.1504, 58.7540, 60.1918, 61.3852, 62.5247, 63.4237, 64.3105, 65.2023, 66.1133, 67.1403, 68.1649, 69.2191, 70.2723, 71.4905, 73.0129, 74.9155, 77.1778, 78.5958, 80.6422, 82.1655, 84.0300, 87.0535, 88.3387, 90.9947, 94.1131, 98.7950, 99.7433, 105.9366),
    },
    'trend': {
        1: (0.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0001, 0.0009, 0.0037, 0.0153, 0.0343, 0.0642, 0.1006, 0.1487, 0.2066, 0.2782, 0.3591, 0.4559, 0.5706, 0.7110, 0.8768, 1.0901, 1.3360, 1.6427, 2.0755, 2.7199, 3.2001, 3.8332, 4.3567, 5.0981, 6.3499, 6.7720, 7.9570, 9.2220, 10.3410, 12.2206, 15.8808),
        2: (1.6708, 2.0117, 2.1953, 2.5303, 2.7913, 3.1553, 3.7398, 4.2338, 5.0314, 5.6090, 6.1120, 6.6039, 7.0867, 7.5422, 7.9905, 8.4579, 8.9219, 9.4064, 9.8981, 10.4678, 11.1091, 11.8071, 12.6138, 13.5709, 14.9358, 15.8873, 17.0819, 17.8911, 19.0036, 20.9374, 21.5582, 23.5848, 25.1304, 28.0413, 29.4841, 34.2769),
        3: (4.2669, 5.2243, 5.5359, 6.1573, 6.5906, 7.2038, 8.1033, 8.9404, 10.0914, 10.8853, 11.5701, 12.1841, 12.7718, 13.3268, 13.8427, 14.3890, 14.9546, 15.5488, 16.1548, 16.8265, 17.5504, 18.3095, 19.3151, 20.4509, 21.9763, 22.9192, 24.2679, 25.0958, 26.4946, 28.4979, 29.1766, 31.2669, 33.2943, 36.6949, 37.9921, 44.7447),
        4: (7.6022, 8.9360, 9.4884, 10.2236, 10.9019, 11.5792, 12.6932, 13.6874, 15.0435, 15.9476, 16.7535, 17.4715, 18.1663, 18.8128, 19.4457, 20.0717, 20.6809, 21.3330, 22.0272, 22.7260, 23.5389, 24.4611, 25.4560, 26.6887, 28.3780, 29.4689, 31.0732, 32.0907, 33.4228, 35.9235, 36.7220, 38.5620, 40.5956, 42.7610, 44.9778, 48.6799),
        5: (12.7727, 13.6229, 14.1312, 14.7276, 15.4641, 16.1045, 17.4480, 18.5284, 20.0501, 21.0510, 21.9245, 22.6865, 23.4196, 24.1696, 24.8674, 25.5807, 26.2765, 26.9947, 27.7224, 28.5280, 29.3872, 30.3744, 31.4269, 32.7435, 34.4546, 35.6334, 37.3252, 38.3096, 39.6506, 42.0238, 42.8681, 45.6146, 47.1967, 50.5105, 52.2044, 56.8046),
        6: (15.8927, 17.1442, 17.7498, 18.7068, 19.6250, 20.5679, 22.0085, 23.4077, 25.0839, 26.2967, 27.2541, 28.1276, 28.9011, 29.6544, 30.3759, 31.1126, 31.8490, 32.6273, 33.4164, 34.2188, 35.1255, 36.1748, 37.2978, 38.6705, 40.5567, 41.7132, 43.3375, 44.3843, 45.8912, 48.4612, 49.3484, 51.7960, 54.0824, 56.5540, 58.0228, 59.9385),
        7: (18.9062, 21.2259, 22.2794, 23.2920, 24.4527, 25.4567, 27.0060, 28.5287, 30.0862, 31.3514, 32.5006, 33.4208, 34.2828, 35.0378, 35.7985, 36.5254, 37.3029, 38.0980, 38.8687, 39.8179, 40.7871, 41.8033, 43.0194, 44.4237, 46.3720, 47.6513, 49.2841, 50.3900, 52.0813, 54.5183, 55.7862, 57.7391, 59.0562, 61.9202, 65.3202, 68.1899),
        8: (25.7222, 27.1207, 27.3357, 28.4069, 29.2152, 30.1385, 31.8917, 33.4523, 35.3603, 36.7752, 37.8660, 38.8410, 39.7324, 40.5859, 41.4103, 42.2165, 43.0135, 43.8662, 44.7944, 45.7046, 46.7219, 47.8376, 49.1041, 50.5865, 52.6521, 53.8907, 55.6506, 56.8450, 58.6385, 61.4772, 61.9227, 64.2971, 66.5745, 70.7964, 72.6234, 74.9872),
        9: (30.3193, 30.8054, 31.8513, 32.9980, 33.9529, 35.1195, 36.9513, 38.4756, 40.4913, 41.8612, 43.0516, 44.0665, 45.0352, 45.9172, 46.7429, 47.6417, 48.5317, 49.4227, 50.3321, 51.3141, 52.3184, 53.4530, 54.7621, 56.3287, 58.6284, 60.0505, 62.0601, 63.2241, 65.2141, 68.0009, 69.0745, 71.7393, 74.3406, 77.2747, 78.4904, 81.1467),
        10: (34.9028, 35.7014, 36.8330, 37.7365, 38.8294, 40.1038, 41.8623, 43.6172, 45.6297, 47.1169, 48.3306, 49.3936, 50.3034, 51.2825, 52.1876, 53.0291, 53.8942, 54.8444, 55.8077, 56.8216, 57.9683, 59.2616, 60.6549, 62.3188, 64.4786, 65.8419, 67.7626, 68.9683, 70.6583, 73.8281, 74.8132, 77.7824, 80.6884, 83.3433, 86.2542, 87.6945),
        11: (38.7366, 40.3150, 41.8259, 43.1087, 43.8365, 44.9967, 47.0626, 48.7769, 50.9459, 52.4756, 53.7682, 54.8492, 55.8989, 56.8804, 57.7910, 58.7069, 59.6674, 60.6495, 61.6039, 62.6116, 63.8277, 65.0535, 66.4832, 68.1783, 70.4260, 71.7609, 73.6550, 75.0315, 76.6726, 79.5225, 80.1988, 83.3908, 85.6565, 89.3835, 91.8863, 101.7884),
        12: (43.6679, 45.3578, 46.4585, 47.8371, 49.1523, 50.3393, 52.2985, 54.1134, 56.2591, 57.8814, 59.0895, 60.2373, 61.2668, 62.2873, 63.2880, 64.2293, 65.1261, 66.0567, 67.1024, 68.1889, 69.3048, 70.5479, 72.0717, 73.9872, 76.3831, 77.7939, 79.8221, 80.9570, 82.7231, 85.9223, 86.5133, 90.1623, 93.5677, 95.9904, 98.4121, 101.1612),
    },
}
