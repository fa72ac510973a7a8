"""Frozen site table for the bundled survey fixture.

Generated by scripts/derive_fixtures.py; do not edit by hand.
"""

SURVEY_SITES = (
    ('216', 0.0, 0.0, 47.7629),
    ('216a', 1.0, 0.0, 50.743),
    ('216b', 0.634, 1.359, 50.4635),
    ('216c', 1.943, 1.033, 50.4757),
    ('216d', 1.835, 2.621, 50.3676),
    ('216e', 4.304, 0.915, 50.1725),
    ('216f', 4.443, 3.728, 50.015),
    ('17', 1000.0, 0.0, 47.78),
    ('17a', 1001.0, 0.0, 50.667),
    ('17b', 1000.634, 1.359, 50.4485),
    ('17c', 1001.943, 1.033, 50.4967),
    ('17d', 1001.835, 2.621, 50.378),
    ('17e', 1004.304, 0.915, 50.1918),
    ('17f', 1004.443, 3.728, 50.038),
    ('238', 2000.0, 0.0, 47.8486),
    ('238a', 2001.0, 0.0, 50.0759),
    ('238b', 2000.634, 1.359, 50.3382),
    ('238c', 2001.943, 1.033, 50.6641),
    ('238d', 2001.835, 2.621, 50.4726),
    ('238e', 2004.304, 0.915, 50.3617),
    ('238f', 2004.443, 3.728, 50.2389),
    ('26', 3000.0, 0.0, 48.0714),
    ('26a', 3001.0, 0.0, 50.3452),
    ('26b', 3000.634, 1.359, 50.3636),
    ('26c', 3001.943, 1.033, 50.5735),
    ('26d', 3001.835, 2.621, 50.3784),
    ('26e', 3004.304, 0.915, 50.2073),
    ('26f', 3004.443, 3.728, 50.0605),
    ('317', 4000.0, 0.0, 48.2),
    ('317a', 4001.0, 0.0, 50.8168),
    ('317b', 4000.634, 1.359, 50.4337),
    ('317c', 4001.943, 1.033, 50.4297),
    ('317d', 4001.835, 2.621, 50.2661),
    ('317e', 4004.304, 0.915, 50.0161),
    ('317f', 4004.443, 3.728, 49.8376),
    ('29', 5000.0, 0.0, 48.0114),
    ('29a', 5001.0, 0.0, 48.6003),
    ('29b', 5000.634, 1.359, 50.0638),
    ('29c', 5001.943, 1.033, 51.0823),
    ('29d', 5001.835, 2.621, 50.7102),
    ('29e', 5004.304, 0.915, 50.7885),
    ('29f', 5004.443, 3.728, 50.7435),
    ('28', 6000.0, 0.0, 47.9086),
    ('28a', 6001.0, 0.0, 48.541),
    ('28b', 6000.634, 1.359, 48.8046),
    ('28c', 6001.943, 1.033, 50.9338),
    ('28d', 6001.835, 2.621, 51.1962),
    ('28e', 6004.304, 0.915, 51.2368),
    ('28f', 6004.443, 3.728, 51.3791),
    ('511', 7000.0, 0.0, 51.6114),
    ('511a', 7001.0, 0.0, 48.8427),
    ('511b', 7000.634, 1.359, 49.7546),
    ('511c', 7001.943, 1.033, 50.8095),
    ('511d', 7001.835, 2.621, 49.9419),
    ('511e', 7004.304, 0.915, 49.6187),
    ('511f', 7004.443, 3.728, 49.4212),
    ('302', 8000.0, 0.0, 51.44),
    ('302a', 8001.0, 0.0, 48.6678),
    ('302b', 8000.634, 1.359, 48.8122),
    ('302c', 8001.943, 1.033, 50.645),
    ('302d', 8001.835, 2.621, 50.381),
    ('302e', 8004.304, 0.915, 50.0492),
    ('302f', 8004.443, 3.728, 50.0048),
    ('239', 9000.0, 0.0, 51.68),
    ('239a', 9001.0, 0.0, 48.8327),
    ('239b', 9000.634, 1.359, 49.6193),
    ('239c', 9001.943, 1.033, 50.7778),
    ('239d', 9001.835, 2.621, 49.9808),
    ('239e', 9004.304, 0.915, 49.6451),
    ('239f', 9004.443, 3.728, 49.4642),
    ('30', 10000.0, 0.0, 52.16),
    ('30a', 10001.0, 0.0, 49.0332),
    ('30b', 10000.634, 1.359, 49.7344),
    ('30c', 10001.943, 1.033, 50.7234),
    ('30d', 10001.835, 2.621, 49.7967),
    ('30e', 10004.304, 0.915, 49.3909),
    ('30f', 10004.443, 3.728, 49.1614),
    ('601', 11000.0, 0.0, 50.1978),
    ('602', 11001.0, 0.0, 49.8022),
    ('603', 12000.0, 0.0, 50.1978),
    ('604', 12001.0, 0.0, 49.8022),
    ('605', 13000.0, 0.0, 50.1978),
    ('606', 13001.0, 0.0, 49.8022),
    ('607', 14000.0, 0.0, 50.1978),
    ('608', 14001.0, 0.0, 49.8022),
    ('609', 15000.0, 0.0, 50.1978),
    ('610', 15001.0, 0.0, 49.8022),
    ('611', 16000.0, 0.0, 50.1978),
    ('612', 16001.0, 0.0, 49.8022),
    ('613', 17000.0, 0.0, 50.1978),
    ('614', 17001.0, 0.0, 49.8022),
    ('615', 18000.0, 0.0, 50.1978),
    ('616', 18001.0, 0.0, 49.8022),
    ('617', 19000.0, 0.0, 50.1978),
    ('618', 19001.0, 0.0, 49.8022),
    ('619', 20000.0, 0.0, 50.1978),
    ('620', 20001.0, 0.0, 49.8022),
    ('621', 21000.0, 0.0, 50.1978),
    ('622', 21001.0, 0.0, 49.8022),
    ('623', 22000.0, 0.0, 50.1978),
    ('624', 22001.0, 0.0, 49.8022),
    ('625', 23000.0, 0.0, 50.1978),
    ('626', 23001.0, 0.0, 49.8022),
)
