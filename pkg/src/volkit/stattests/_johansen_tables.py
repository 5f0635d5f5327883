"""Asymptotic quantiles of the Johansen trace and max-eigenvalue
statistics, simulated once (see tools/simulate_trace_quantiles.py)
with the published 90/95/99% points patched in exactly."""

# generated by tools/simulate_trace_quantiles.py: seed=987654321, reps=200000, steps=1000

PROBS = [0.005, 0.01, 0.025, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.975, 0.99, 0.995, 0.999, 0.9999]

TRACE_QUANTILES = {
    "none": {
        1: (0.0001, 0.0002, 0.0015, 0.0060, 0.0238, 0.0953, 0.2163, 0.3835, 0.6021, 0.8878, 1.2851, 1.8785, 2.9762, 4.1296, 5.3292, 6.9406, 8.1911, 11.3247, 15.4720),
        2: (1.0314, 1.2473, 1.6098, 1.9952, 2.5386, 3.3583, 4.0715, 4.7646, 5.4867, 6.2909, 7.2419, 8.4650, 10.4741, 12.3212, 14.0540, 16.3640, 17.9182, 22.1336, 27.1731),
        3: (5.5976, 6.1755, 7.1121, 8.0113, 9.1611, 10.7263, 12.0058, 13.1912, 14.3952, 15.6577, 17.0992, 18.9256, 21.7781, 24.2761, 26.6122, 29.5147, 31.4795, 35.9975, 42.2141),
        4: (14.0529, 15.0658, 16.5478, 18.0227, 19.8023, 22.1387, 23.9868, 25.6555, 27.3077, 29.0214, 30.9617, 33.3581, 37.0339, 40.1749, 42.8526, 46.5716, 48.9081, 54.1903, 61.7748),
        5: (26.4664, 27.8473, 29.9889, 31.9982, 34.4610, 37.5512, 39.9565, 42.1074, 44.1824, 46.3307, 48.7615, 51.7220, 56.2839, 60.0627, 63.2713, 67.6367, 70.5213, 76.3760, 85.5466),
        6: (42.8085, 44.6432, 47.4666, 50.0211, 53.0494, 56.8830, 59.8465, 62.4570, 64.9653, 67.5534, 70.4291, 73.9216, 79.5329, 83.9383, 87.2581, 92.7136, 95.4814, 102.9648, 112.6475),
        7: (63.1231, 65.4001, 68.8350, 71.8419, 75.4712, 80.0897, 83.6148, 86.7036, 89.6726, 92.6967, 96.0316, 100.0968, 106.7351, 111.7797, 115.5424, 121.7375, 124.8008, 132.7747, 144.3388),
        8: (87.5313, 90.1343, 94.2074, 97.7261, 102.1123, 107.4534, 111.5278, 115.0897, 118.4948, 122.0258, 125.8643, 130.4170, 137.9954, 143.6691, 147.4998, 154.7977, 157.7444, 167.0433, 178.1459),
        9: (115.6851, 118.7286, 123.3315, 127.3974, 132.2787, 138.4289, 143.0480, 147.0705, 150.9648, 154.9007, 159.2009, 164.4113, 173.2292, 179.5199, 183.5317, 191.8122, 194.7771, 204.3013, 217.8744),
        10: (147.7389, 151.1057, 156.3352, 161.0246, 166.6197, 173.5252, 178.6601, 183.1748, 187.4504, 191.7881, 196.5490, 202.1629, 212.4721, 219.4051, 223.3859, 232.8291, 235.9531, 246.7965, 260.3787),
        11: (183.8680, 187.7449, 193.5505, 198.6737, 204.7711, 212.5098, 218.1982, 223.1334, 227.8862, 232.6682, 237.8824, 244.1080, 255.6732, 263.2603, 266.9252, 277.9962, 280.2495, 292.0461, 306.4168),
        12: (223.4470, 227.7876, 234.1457, 239.9899, 246.7417, 255.1367, 261.3295, 266.7509, 271.9045, 277.1549, 282.8515, 289.5971, 302.9054, 311.1288, 314.5260, 326.9716, 328.8899, 341.3887, 355.4547),
    },
    "constant": {
        1: (0.0000, 0.0002, 0.0010, 0.0040, 0.0159, 0.0639, 0.1484, 0.2754, 0.4583, 0.7100, 1.0727, 1.6396, 2.7055, 3.8415, 5.0354, 6.6349, 7.8806, 10.8521, 14.6240),
        2: (1.9833, 2.2599, 2.7821, 3.3060, 4.0281, 5.0737, 5.9472, 6.7845, 7.6564, 8.6128, 9.7097, 11.1301, 13.4294, 15.4943, 17.4892, 19.9349, 21.6355, 25.7325, 31.9749),
        3: (8.4279, 9.1288, 10.2557, 11.3472, 12.7167, 14.5759, 16.0623, 17.4467, 18.8065, 20.2389, 21.8649, 23.8716, 27.0669, 29.7961, 32.1407, 35.4628, 37.5671, 42.5056, 49.2410),
        4: (18.9582, 20.1097, 21.8674, 23.4914, 25.5331, 28.1684, 30.1824, 32.0474, 33.8485, 35.7353, 37.8409, 40.4588, 44.4929, 47.8545, 50.6183, 54.6815, 57.0326, 62.6673, 71.1546),
        5: (33.4417, 34.9745, 37.4084, 39.5702, 42.1875, 45.5809, 48.1858, 50.5019, 52.7564, 55.0936, 57.6657, 60.7964, 65.8202, 69.8189, 72.9651, 77.8202, 80.3458, 87.1714, 95.6919),
        6: (51.7148, 53.7715, 56.7973, 59.5360, 62.8414, 66.9652, 70.1068, 72.8469, 75.5304, 78.3342, 81.3659, 85.0627, 91.1090, 95.7542, 99.1487, 104.9637, 107.5468, 115.1176, 126.9429),
        7: (74.1135, 76.4607, 80.0964, 83.3456, 87.2154, 92.1393, 95.8239, 99.0744, 102.2346, 105.4712, 109.0336, 113.2841, 120.3673, 125.6185, 129.2087, 135.9825, 138.6609, 146.7026, 158.0414),
        8: (100.4886, 103.3254, 107.5015, 111.2004, 115.7506, 121.3975, 125.6696, 129.4064, 132.9860, 136.6320, 140.5948, 145.4010, 153.6341, 159.5290, 163.1286, 171.0905, 173.8084, 182.6144, 194.7862),
        9: (130.4796, 133.7500, 138.5605, 142.8674, 147.9742, 154.4008, 159.2504, 163.4605, 167.4730, 171.5430, 176.0064, 181.2779, 190.8714, 197.3772, 201.0892, 210.0366, 212.8999, 222.8916, 235.4199),
        10: (164.6481, 168.1640, 173.5437, 178.3628, 184.1822, 191.4094, 196.7728, 201.4128, 205.7855, 210.2963, 215.2048, 221.0929, 232.1030, 239.2468, 242.6248, 253.2526, 255.2022, 266.4925, 281.3107),
        11: (202.5428, 206.4859, 212.7259, 217.9820, 224.3640, 232.2940, 238.2204, 243.3063, 248.1791, 253.0816, 258.4831, 264.9307, 277.3740, 285.1402, 288.4664, 300.2821, 301.6000, 313.4214, 328.3536),
        12: (244.2804, 248.7114, 255.3117, 261.1396, 268.1727, 276.8225, 283.2623, 288.8561, 294.1795, 299.5567, 305.3699, 312.3648, 326.5354, 334.9795, 337.9872, 351.2150, 352.9395, 365.4706, 379.6400),
    },
}

MAX_QUANTILES = {
    "none": {
        1: (0.0001, 0.0002, 0.0015, 0.0060, 0.0238, 0.0953, 0.2163, 0.3835, 0.6021, 0.8878, 1.2851, 1.8785, 2.9762, 4.1296, 5.3292, 6.9406, 8.1911, 11.3247, 15.4720),
        2: (0.8922, 1.0675, 1.3883, 1.7205, 2.1934, 2.9162, 3.5456, 4.1770, 4.8304, 5.5696, 6.4501, 7.5881, 9.4748, 11.2246, 12.8955, 15.0923, 16.6451, 20.4887, 25.3468),
        3: (3.4852, 3.8605, 4.4813, 5.0994, 5.9359, 7.0766, 8.0208, 8.9151, 9.8184, 10.8078, 11.9480, 13.4130, 15.7175, 17.7961, 19.7114, 22.2519, 23.9052, 27.7804, 33.5408),
        4: (6.9162, 7.4563, 8.3433, 9.1618, 10.2385, 11.6930, 12.8663, 13.9371, 15.0312, 16.1793, 17.5082, 19.1742, 21.8370, 24.1592, 26.1486, 29.0609, 30.8218, 35.0771, 40.2831),
        5: (10.7490, 11.4351, 12.5190, 13.5506, 14.8258, 16.5321, 17.8938, 19.1196, 20.3575, 21.6407, 23.1040, 24.9584, 27.9160, 30.4428, 32.6483, 35.7359, 37.6373, 42.2485, 49.7206),
        6: (14.8966, 15.7434, 17.0170, 18.1767, 19.6132, 21.5089, 22.9992, 24.3454, 25.6861, 27.1047, 28.7100, 30.7076, 33.9271, 36.6301, 38.8376, 42.2333, 43.9301, 48.8526, 55.0577),
        7: (19.3113, 20.2371, 21.6146, 22.8894, 24.4555, 26.5304, 28.1409, 29.6027, 31.0481, 32.5905, 34.3016, 36.4365, 39.9085, 42.7679, 44.9974, 48.6606, 50.5743, 55.8085, 63.1180),
        8: (23.9243, 24.8840, 26.3881, 27.7913, 29.4728, 31.6764, 33.4145, 34.9893, 36.5393, 38.1520, 39.9637, 42.1918, 45.8930, 48.8795, 51.2616, 55.0335, 57.0500, 62.2069, 69.4535),
        9: (28.4840, 29.4996, 31.1565, 32.6411, 34.4501, 36.8086, 38.6612, 40.2989, 41.9150, 43.6030, 45.5284, 47.8732, 51.8528, 54.9629, 57.2716, 61.3449, 63.1048, 68.5494, 75.0289),
        10: (33.2292, 34.3154, 36.0149, 37.5962, 39.5366, 42.0486, 43.9604, 45.6716, 47.3619, 49.1436, 51.1302, 53.5943, 57.7954, 61.0404, 63.3079, 67.6415, 69.3703, 75.4248, 82.6273),
        11: (38.0692, 39.2115, 41.0591, 42.7177, 44.7016, 47.3148, 49.3191, 51.1035, 52.8605, 54.7047, 56.7591, 59.3028, 63.7248, 67.0756, 69.4672, 73.8856, 75.8211, 81.6051, 88.6350),
        12: (42.7887, 44.0358, 45.9222, 47.6305, 49.7313, 52.4625, 54.5661, 56.4485, 58.2868, 60.1909, 62.3315, 64.9365, 69.6513, 73.0946, 75.3245, 80.0937, 81.8545, 87.7961, 95.5370),
    },
    "constant": {
        1: (0.0000, 0.0002, 0.0010, 0.0040, 0.0159, 0.0639, 0.1484, 0.2754, 0.4583, 0.7100, 1.0727, 1.6396, 2.7055, 3.8415, 5.0354, 6.6349, 7.8806, 10.8521, 14.6240),
        2: (1.7630, 2.0166, 2.4685, 2.9365, 3.5723, 4.5215, 5.3140, 6.0769, 6.8772, 7.7618, 8.8005, 10.1367, 12.2971, 14.2639, 16.0900, 18.5200, 20.1641, 24.1863, 29.7864),
        3: (5.0662, 5.5174, 6.2858, 7.0461, 8.0014, 9.3255, 10.4010, 11.3995, 12.4070, 13.5181, 14.7720, 16.3404, 18.8928, 21.1314, 23.0966, 25.8650, 27.7482, 32.0237, 37.9142),
        4: (8.8907, 9.5178, 10.5237, 11.4562, 12.6501, 14.2443, 15.5235, 16.6844, 17.8353, 19.0715, 20.4845, 22.2945, 25.1236, 27.5858, 29.7123, 32.7172, 34.5709, 38.8839, 44.4125),
        5: (13.0155, 13.7696, 14.9603, 16.0374, 17.3835, 19.1969, 20.6255, 21.9353, 23.2363, 24.6084, 26.1804, 28.1164, 31.2379, 33.8777, 36.0755, 39.3693, 41.1702, 46.1031, 52.6758),
        6: (17.3423, 18.1862, 19.4990, 20.7477, 22.2659, 24.2730, 25.8306, 27.2444, 28.6440, 30.1157, 31.7764, 33.8730, 37.2786, 40.0763, 42.2177, 45.8662, 47.5728, 52.9334, 60.2935),
        7: (21.8532, 22.7698, 24.2006, 25.5417, 27.1816, 29.3597, 31.0520, 32.5665, 34.0629, 35.6522, 37.4385, 39.6154, 43.2947, 46.2299, 48.5007, 52.3069, 54.1111, 59.3458, 67.8364),
        8: (26.4274, 27.4592, 29.0345, 30.4718, 32.2298, 34.5608, 36.3422, 37.9531, 39.5499, 41.2115, 43.0860, 45.3914, 49.2855, 52.3622, 54.7279, 58.6634, 60.6344, 66.0424, 74.2337),
        9: (31.0951, 32.1553, 33.8435, 35.4087, 37.2744, 39.7310, 41.6383, 43.3275, 44.9670, 46.7266, 48.6891, 51.1092, 55.2412, 58.4332, 60.6086, 64.9960, 66.6079, 72.1148, 79.0036),
        10: (35.8373, 37.0257, 38.7988, 40.4039, 42.4038, 44.9613, 46.9139, 48.6863, 50.4278, 52.2419, 54.2654, 56.7820, 61.2041, 64.5040, 66.7397, 71.2525, 72.9672, 78.8230, 85.7841),
        11: (40.6685, 41.8786, 43.7386, 45.4466, 47.5224, 50.2023, 52.2616, 54.1326, 55.9412, 57.8103, 59.9088, 62.4783, 67.1307, 70.5392, 72.8065, 77.4877, 79.3407, 85.2101, 93.1065),
        12: (45.5120, 46.7762, 48.7698, 50.5196, 52.6834, 55.4564, 57.5957, 59.4750, 61.3529, 63.2912, 65.4828, 68.1799, 73.0563, 76.5734, 78.8004, 83.7105, 85.5310, 91.5788, 99.2898),
    },
}

