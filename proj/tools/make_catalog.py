#!/usr/bin/env python3
"""Regenerates data/catalog.json, the synthetic asset/material/spawn database.

Dimensions are hand-tuned plausible ranges per type; instances interpolate
across the range with a small seeded jitter. Spawn probabilities are stored as
occurrence counts over a receptacle sighting total so the ratio provenance
stays in the file.
"""

import json
import random
import sys

rng = random.Random(20240817)

# name: (placements, [bed, bath, kitchen, living], dup, receptacle, n, (w0,w1), (h0,h1), (d0,d1), extra)
FLOOR_TYPES = {
    "bed":              ("edge corner",       [3, 0, 0, 0], False, True,  8, (1.40, 2.00), (0.55, 0.70), (1.90, 2.15), {"material_class": "bed_fabric", "states": ["dirtyable"]}),
    "wardrobe":         ("edge corner",       [2, 0, 0, 0], False, False, 5, (1.00, 1.80), (1.90, 2.20), (0.55, 0.65), {"material_class": "wood", "states": ["openable"]}),
    "dresser":          ("edge",              [2, 0, 0, 1], False, True,  6, (1.00, 1.50), (0.75, 0.95), (0.45, 0.55), {"material_class": "wood"}),
    "side_table":       ("edge corner middle",[2, 0, 0, 2], True,  True,  8, (0.40, 0.60), (0.50, 0.65), (0.40, 0.60), {"material_class": "wood"}),
    "desk":             ("edge corner",       [2, 0, 0, 1], False, True,  6, (1.10, 1.60), (0.73, 0.78), (0.55, 0.70), {"material_class": "wood"}),
    "chair":            ("edge middle",       [1, 0, 2, 2], True,  True, 12, (0.42, 0.52), (0.85, 1.00), (0.45, 0.55), {"material_class": "wood_fabric", "receptacle_bias": 0.0}),
    "arm_chair":        ("edge corner middle",[1, 0, 0, 3], True,  True,  8, (0.75, 0.95), (0.75, 0.90), (0.80, 0.95), {"material_class": "fabric", "receptacle_bias": 0.0}),
    "sofa":             ("edge corner",       [0, 0, 0, 3], False, True,  8, (1.60, 2.20), (0.75, 0.90), (0.85, 1.00), {"material_class": "fabric"}),
    "loveseat":         ("edge corner",       [0, 0, 0, 2], False, True,  4, (1.30, 1.50), (0.75, 0.85), (0.80, 0.90), {"material_class": "fabric"}),
    "coffee_table":     ("middle",            [0, 0, 0, 3], False, True,  7, (0.90, 1.30), (0.40, 0.48), (0.50, 0.70), {"material_class": "wood"}),
    "tv_stand":         ("edge",              [0, 0, 0, 2], False, True,  6, (1.20, 1.80), (0.45, 0.60), (0.35, 0.45), {"material_class": "wood"}),
    "dining_table":     ("middle",            [0, 0, 2, 2], False, True,  8, (1.20, 1.80), (0.72, 0.78), (0.80, 0.95), {"material_class": "wood"}),
    "counter_top":      ("edge corner",       [0, 0, 3, 0], True,  True,  8, (1.20, 2.40), (0.90, 0.95), (0.60, 0.65), {"material_class": "stone", "receptacle_bias": 0.2}),
    "kitchen_island":   ("middle",            [0, 0, 1, 0], False, True,  4, (1.20, 1.80), (0.90, 0.95), (0.80, 1.00), {"material_class": "stone"}),
    "fridge":           ("edge corner",       [0, 0, 3, 0], False, False, 6, (0.70, 0.95), (1.70, 1.90), (0.70, 0.80), {"material_class": "metal", "states": ["openable"]}),
    "stove":            ("edge",              [0, 0, 2, 0], False, True,  5, (0.60, 0.76), (0.90, 0.95), (0.60, 0.70), {"material_class": "metal"}),
    "dishwasher":       ("edge",              [0, 0, 1, 0], False, False, 3, (0.58, 0.62), (0.83, 0.87), (0.58, 0.62), {"material_class": "metal", "states": ["openable"]}),
    "sink_base":        ("edge",              [0, 0, 2, 0], False, True,  4, (0.80, 1.20), (0.85, 0.90), (0.55, 0.65), {"material_class": "stone"}),
    "shelving_unit":    ("edge corner",       [1, 0, 1, 2], True,  True,  6, (0.80, 1.20), (1.60, 2.00), (0.30, 0.45), {"material_class": "wood", "receptacle_bias": 0.4}),
    "bookcase":         ("edge corner",       [1, 0, 0, 2], True,  True,  6, (0.80, 1.10), (1.80, 2.10), (0.30, 0.40), {"material_class": "wood"}),
    "sideboard":        ("edge",              [0, 0, 1, 2], False, True,  4, (1.20, 1.80), (0.80, 0.90), (0.40, 0.50), {"material_class": "wood"}),
    "toilet":           ("edge corner",       [0, 3, 0, 0], False, False, 6, (0.38, 0.48), (0.75, 0.80), (0.65, 0.75), {"material_class": "ceramic"}),
    "bathtub":          ("edge corner",       [0, 1, 0, 0], False, True,  4, (0.72, 0.80), (0.55, 0.65), (1.40, 1.60), {"material_class": "ceramic"}),
    "shower_stall":     ("corner",            [0, 2, 0, 0], False, False, 3, (0.85, 1.00), (2.00, 2.10), (0.85, 1.00), {"material_class": "glass"}),
    "bathroom_vanity":  ("edge",              [0, 3, 0, 0], False, True,  5, (0.60, 1.20), (0.85, 0.90), (0.50, 0.55), {"material_class": "stone"}),
    "washing_machine":  ("edge corner",       [0, 1, 1, 0], False, False, 3, (0.58, 0.62), (0.83, 0.87), (0.58, 0.62), {"material_class": "metal", "states": ["openable"]}),
    "floor_lamp":       ("corner edge middle",[2, 0, 0, 3], True,  False, 6, (0.30, 0.40), (1.50, 1.80), (0.30, 0.40), {"material_class": "metal", "states": ["toggleable"]}),
    "house_plant":      ("corner edge middle",[1, 1, 1, 2], True,  False, 8, (0.30, 0.60), (0.50, 1.60), (0.30, 0.60), {"material_class": "plant", "object_bias": 0.25}),
    "ottoman":          ("middle edge",       [1, 0, 0, 2], True,  True,  4, (0.50, 0.80), (0.40, 0.45), (0.40, 0.60), {"material_class": "fabric"}),
    "piano":            ("edge",              [0, 0, 0, 1], False, True,  2, (1.40, 1.50), (1.00, 1.25), (0.60, 0.65), {"material_class": "wood"}),
    "bar_stool":        ("middle edge",       [0, 0, 1, 1], True,  False, 4, (0.38, 0.45), (0.65, 0.80), (0.38, 0.45), {"material_class": "wood"}),
    "bench":            ("edge",              [1, 0, 0, 1], True,  True,  4, (1.00, 1.40), (0.45, 0.50), (0.35, 0.45), {"material_class": "wood"}),
    "storage_cabinet":  ("edge corner",       [1, 1, 1, 1], True,  True,  5, (0.70, 1.00), (1.20, 1.80), (0.40, 0.50), {"material_class": "wood", "states": ["openable"]}),
    "standing_mirror":  ("corner edge",       [1, 1, 0, 0], False, False, 3, (0.40, 0.50), (1.50, 1.70), (0.35, 0.45), {"material_class": "glass"}),
    "garbage_can":      ("corner edge",       [1, 1, 2, 1], True,  False, 6, (0.28, 0.40), (0.40, 0.70), (0.28, 0.40), {"material_class": "metal"}),
    "dog_bed":          ("corner middle edge",[1, 0, 0, 1], False, False, 3, (0.60, 0.80), (0.18, 0.22), (0.50, 0.70), {"material_class": "fabric"}),
    "treadmill":        ("edge corner",       [1, 0, 0, 1], False, False, 2, (0.75, 0.80), (1.30, 1.40), (1.60, 1.80), {"material_class": "metal"}),
    "safe":             ("corner",            [1, 0, 0, 0], False, False, 2, (0.45, 0.50), (0.50, 0.60), (0.45, 0.50), {"material_class": "metal", "states": ["openable"]}),
    "toilet_paper_stand": ("edge corner",     [0, 2, 0, 0], False, False, 2, (0.18, 0.22), (0.60, 0.70), (0.18, 0.22), {"material_class": "metal"}),
    "towel_stand":      ("edge corner",       [0, 2, 0, 0], False, True,  3, (0.45, 0.55), (0.80, 0.90), (0.25, 0.30), {"material_class": "metal"}),
    "laundry_hamper":   ("corner edge",       [1, 1, 0, 0], True,  False, 3, (0.40, 0.50), (0.55, 0.65), (0.40, 0.50), {"material_class": "fabric"}),
    "rocking_chair":    ("edge middle",       [1, 0, 0, 1], False, False, 2, (0.55, 0.60), (0.95, 1.05), (0.80, 0.90), {"material_class": "wood"}),
    "wine_rack":        ("edge",              [0, 0, 1, 1], False, True,  2, (0.50, 0.60), (0.90, 1.10), (0.28, 0.32), {"material_class": "wood"}),
    "coat_rack":        ("corner",            [1, 0, 0, 1], False, False, 2, (0.35, 0.40), (1.70, 1.80), (0.35, 0.40), {"material_class": "wood"}),
    "plunger":          ("corner",            [0, 2, 0, 0], False, False, 2, (0.13, 0.15), (0.55, 0.60), (0.13, 0.15), {"material_class": "wood"}),
}

# name: (n, dims, extra)
SMALL_TYPES = {
    "desk_lamp":      (5, (0.15, 0.22), (0.35, 0.50), (0.15, 0.22), {"material_class": "metal", "states": ["toggleable"]}),
    "vase":           (6, (0.10, 0.20), (0.25, 0.45), (0.10, 0.20), {"material_class": "ceramic", "color_randomizable": True}),
    "statue":         (5, (0.12, 0.25), (0.25, 0.50), (0.12, 0.25), {"material_class": "stone_decor", "color_randomizable": True}),
    "bottle":         (5, (0.07, 0.10), (0.25, 0.35), (0.07, 0.10), {"material_class": "glass_bottle", "color_randomizable": True}),
    "wine_bottle":    (3, (0.07, 0.09), (0.28, 0.32), (0.07, 0.09), {"material_class": "glass_bottle"}),
    "mug":            (6, (0.08, 0.10), (0.09, 0.12), (0.08, 0.10), {"material_class": "ceramic_cup"}),
    "cup":            (4, (0.07, 0.09), (0.08, 0.11), (0.07, 0.09), {"material_class": "ceramic_cup"}),
    "plate":          (6, (0.20, 0.28), (0.02, 0.03), (0.20, 0.28), {"material_class": "ceramic_plate"}),
    "bowl":           (6, (0.12, 0.20), (0.06, 0.10), (0.12, 0.20), {"material_class": "ceramic_plate", "object_bias": 0.05}),
    "pan":            (4, (0.24, 0.30), (0.06, 0.10), (0.40, 0.50), {"material_class": "metal_cookware", "object_bias": 0.1}),
    "pot":            (4, (0.20, 0.26), (0.12, 0.18), (0.20, 0.26), {"material_class": "metal_cookware", "object_bias": 0.1}),
    "kettle":         (3, (0.18, 0.22), (0.20, 0.24), (0.18, 0.22), {"material_class": "metal_cookware"}),
    "toaster":        (3, (0.26, 0.30), (0.17, 0.20), (0.16, 0.18), {"material_class": "metal_appliance"}),
    "coffee_machine": (4, (0.25, 0.30), (0.30, 0.40), (0.25, 0.35), {"material_class": "metal_appliance"}),
    "microwave":      (4, (0.45, 0.55), (0.28, 0.33), (0.35, 0.40), {"material_class": "metal_appliance", "states": ["openable"]}),
    "blender":        (3, (0.16, 0.18), (0.35, 0.40), (0.16, 0.18), {"material_class": "metal_appliance"}),
    "cutting_board":  (3, (0.30, 0.40), (0.02, 0.03), (0.20, 0.28), {"material_class": "wood_small"}),
    "knife":          (4, (0.02, 0.03), (0.02, 0.03), (0.20, 0.33), {"material_class": "metal_utensil"}),
    "fork":           (3, (0.02, 0.03), (0.015, 0.02), (0.17, 0.19), {"material_class": "metal_utensil"}),
    "spoon":          (3, (0.03, 0.04), (0.015, 0.02), (0.16, 0.18), {"material_class": "metal_utensil"}),
    "spatula":        (2, (0.07, 0.08), (0.02, 0.03), (0.30, 0.33), {"material_class": "metal_utensil"}),
    "salt_shaker":    (2, (0.04, 0.05), (0.09, 0.11), (0.04, 0.05), {"material_class": "glass_small"}),
    "pepper_shaker":  (2, (0.04, 0.05), (0.09, 0.11), (0.04, 0.05), {"material_class": "glass_small"}),
    "apple":          (4, (0.07, 0.08), (0.07, 0.08), (0.07, 0.08), {"material_class": "fruit_apple"}),
    "orange":         (3, (0.07, 0.08), (0.07, 0.08), (0.07, 0.08), {"material_class": "fruit_orange"}),
    "banana":         (2, (0.04, 0.05), (0.04, 0.05), (0.18, 0.20), {"material_class": "fruit_banana"}),
    "bread":          (3, (0.12, 0.14), (0.10, 0.12), (0.22, 0.26), {"material_class": "food_bread"}),
    "tomato":         (3, (0.06, 0.08), (0.06, 0.08), (0.06, 0.08), {"material_class": "food_veg"}),
    "potato":         (3, (0.06, 0.07), (0.05, 0.06), (0.09, 0.11), {"material_class": "food_veg"}),
    "lettuce":        (2, (0.14, 0.16), (0.12, 0.14), (0.14, 0.16), {"material_class": "food_veg"}),
    "egg":            (2, (0.04, 0.045), (0.05, 0.055), (0.04, 0.045), {"material_class": "food_egg"}),
    "book":           (8, (0.13, 0.23), (0.03, 0.05), (0.18, 0.30), {"material_class": "paper_book"}),
    "notebook":       (3, (0.15, 0.18), (0.01, 0.02), (0.21, 0.23), {"material_class": "paper_book"}),
    "newspaper":      (2, (0.25, 0.28), (0.01, 0.02), (0.33, 0.36), {"material_class": "paper_book"}),
    "magazine":       (2, (0.21, 0.23), (0.01, 0.02), (0.28, 0.30), {"material_class": "paper_book"}),
    "pen":            (3, (0.01, 0.015), (0.01, 0.015), (0.13, 0.15), {"material_class": "plastic_small"}),
    "pencil":         (3, (0.01, 0.015), (0.01, 0.015), (0.17, 0.19), {"material_class": "plastic_small"}),
    "laptop":         (5, (0.30, 0.36), (0.02, 0.03), (0.21, 0.25), {"material_class": "metal_device", "states": ["openable"]}),
    "cellphone":      (3, (0.07, 0.08), (0.008, 0.012), (0.14, 0.16), {"material_class": "metal_device"}),
    "alarm_clock":    (4, (0.10, 0.15), (0.08, 0.12), (0.05, 0.08), {"material_class": "metal_device"}),
    "remote_control": (3, (0.05, 0.06), (0.02, 0.03), (0.16, 0.18), {"material_class": "plastic_small"}),
    "tissue_box":     (3, (0.12, 0.13), (0.08, 0.09), (0.23, 0.25), {"material_class": "paper_box"}),
    "box":            (5, (0.25, 0.45), (0.20, 0.35), (0.25, 0.45), {"material_class": "cardboard", "states": ["openable"]}),
    "board_game":     (3, (0.27, 0.30), (0.05, 0.07), (0.27, 0.30), {"material_class": "cardboard"}),
    "cd":             (2, (0.125, 0.13), (0.008, 0.01), (0.14, 0.142), {"material_class": "plastic_small"}),
    "dvd_player":     (2, (0.42, 0.44), (0.05, 0.07), (0.29, 0.31), {"material_class": "metal_device"}),
    "game_console":   (2, (0.28, 0.32), (0.06, 0.08), (0.24, 0.28), {"material_class": "metal_device"}),
    "candle":         (4, (0.06, 0.09), (0.08, 0.15), (0.06, 0.09), {"material_class": "wax"}),
    "photo_frame":    (4, (0.13, 0.20), (0.15, 0.25), (0.03, 0.04), {"material_class": "wood_small"}),
    "teddy_bear":     (3, (0.20, 0.26), (0.28, 0.34), (0.16, 0.20), {"material_class": "fabric_toy"}),
    "pillow":         (6, (0.45, 0.60), (0.12, 0.18), (0.30, 0.40), {"material_class": "fabric_pillow"}),
    "cushion":        (4, (0.40, 0.45), (0.12, 0.15), (0.40, 0.45), {"material_class": "fabric_pillow"}),
    "blanket":        (3, (0.40, 0.50), (0.10, 0.14), (0.30, 0.40), {"material_class": "fabric_textile"}),
    "towel":          (4, (0.30, 0.36), (0.04, 0.06), (0.20, 0.26), {"material_class": "fabric_textile"}),
    "soap_bar":       (2, (0.08, 0.09), (0.03, 0.04), (0.05, 0.06), {"material_class": "soap"}),
    "spray_bottle":   (3, (0.08, 0.09), (0.20, 0.24), (0.08, 0.09), {"material_class": "plastic_bottle", "object_bias": 0.2}),
    "shampoo_bottle": (3, (0.07, 0.08), (0.18, 0.22), (0.07, 0.08), {"material_class": "plastic_bottle"}),
    "toothbrush":     (2, (0.015, 0.02), (0.015, 0.02), (0.18, 0.20), {"material_class": "plastic_small"}),
    "toothpaste":     (2, (0.04, 0.05), (0.03, 0.04), (0.16, 0.18), {"material_class": "plastic_small"}),
    "toilet_paper":   (3, (0.11, 0.12), (0.10, 0.11), (0.11, 0.12), {"material_class": "paper_roll"}),
    "scrub_brush":    (2, (0.06, 0.07), (0.08, 0.10), (0.20, 0.24), {"material_class": "plastic_small"}),
    "basketball":     (3, (0.24, 0.25), (0.24, 0.25), (0.24, 0.25), {"material_class": "rubber_ball", "object_bias": 0.2}),
    "baseball_bat":   (2, (0.07, 0.08), (0.07, 0.08), (0.80, 0.90), {"material_class": "wood_small", "object_bias": 0.1}),
    "tennis_racket":  (2, (0.26, 0.28), (0.03, 0.04), (0.66, 0.70), {"material_class": "plastic_sport"}),
    "dumbbell":       (3, (0.12, 0.20), (0.12, 0.20), (0.25, 0.35), {"material_class": "metal_sport"}),
    "watch":          (2, (0.05, 0.06), (0.02, 0.03), (0.07, 0.08), {"material_class": "metal_small"}),
    "wallet":         (2, (0.09, 0.10), (0.02, 0.03), (0.11, 0.12), {"material_class": "leather_small"}),
    "keys":           (2, (0.04, 0.05), (0.01, 0.02), (0.08, 0.09), {"material_class": "metal_small"}),
    "faucet":         (4, (0.10, 0.15), (0.25, 0.35), (0.15, 0.20), {"material_class": "metal_fixture"}),
}

WALL_TYPES = {
    "window":     (8,  (0.60, 1.70), (0.80, 1.40), (0.10, 0.12), "window"),
    "painting":   (10, (0.40, 1.40), (0.35, 1.00), (0.04, 0.05), "painting"),
    "television": (8,  (0.90, 1.45), (0.55, 0.85), (0.06, 0.09), "television"),
}

DOOR_TYPES = {
    "doorway":    ([0.86, 0.90, 0.96, 1.00, 1.70], "doorway"),
    "door_frame": ([0.90, 0.95, 1.00, 1.75], "door_frame"),
}

# receptacle: (sightings, {object: approx probability})
SPAWN = {
    "counter_top": (40, {
        "mug": .25, "plate": .2, "bowl": .18, "cup": .15, "pan": .12, "pot": .12, "kettle": .12,
        "toaster": .18, "coffee_machine": .2, "microwave": .18, "blender": .1, "cutting_board": .15,
        "knife": .12, "fork": .08, "spoon": .08, "spatula": .06, "salt_shaker": .12,
        "pepper_shaker": .1, "bottle": .15, "wine_bottle": .08, "apple": .12, "orange": .08,
        "banana": .06, "bread": .12, "tomato": .08, "potato": .06, "lettuce": .05, "egg": .04,
        "spray_bottle": .08, "tissue_box": .05, "book": .03, "house_plant": .08, "candle": .05,
        "vase": .06}),
    "dining_table": (30, {
        "plate": .3, "bowl": .15, "mug": .2, "cup": .1, "fork": .12, "knife": .12, "spoon": .1,
        "vase": .15, "candle": .12, "bottle": .1, "wine_bottle": .08, "salt_shaker": .1,
        "pepper_shaker": .08, "book": .05, "laptop": .05, "apple": .06, "bread": .05}),
    "coffee_table": (30, {
        "remote_control": .3, "book": .25, "magazine": .15, "mug": .15, "vase": .12, "candle": .12,
        "bowl": .08, "laptop": .1, "cellphone": .08, "board_game": .06, "tissue_box": .08,
        "cup": .06}),
    "desk": (25, {
        "laptop": .4, "pen": .3, "pencil": .2, "notebook": .3, "book": .25, "desk_lamp": .35,
        "cellphone": .15, "mug": .2, "photo_frame": .12, "alarm_clock": .08, "tissue_box": .06,
        "cd": .05}),
    "side_table": (30, {
        "alarm_clock": .3, "desk_lamp": .3, "book": .2, "cellphone": .12, "tissue_box": .15,
        "candle": .12, "photo_frame": .15, "vase": .08, "mug": .08, "watch": .06, "wallet": .06,
        "keys": .08}),
    "shelving_unit": (25, {
        "book": .5, "vase": .2, "statue": .15, "photo_frame": .2, "box": .15, "board_game": .12,
        "cd": .1, "candle": .12, "house_plant": .15, "teddy_bear": .06, "bottle": .06,
        "basketball": .08, "baseball_bat": .05}),
    "bookcase": (25, {
        "book": .6, "photo_frame": .15, "vase": .12, "statue": .1, "board_game": .1, "cd": .08,
        "box": .08, "candle": .08}),
    "bathroom_vanity": (20, {
        "soap_bar": .3, "spray_bottle": .2, "shampoo_bottle": .25, "toothbrush": .3,
        "toothpaste": .25, "towel": .2, "tissue_box": .15, "candle": .08, "toilet_paper": .15,
        "scrub_brush": .08}),
    "tv_stand": (20, {
        "dvd_player": .3, "game_console": .25, "remote_control": .3, "cd": .15, "photo_frame": .1,
        "box": .08, "candle": .05}),
    "kitchen_island": (15, {
        "bowl": .2, "plate": .15, "cutting_board": .2, "apple": .12, "banana": .08, "bread": .1,
        "mug": .1, "vase": .08, "pot": .08, "pan": .08}),
    "sideboard": (15, {
        "vase": .25, "candle": .2, "photo_frame": .2, "bowl": .1, "statue": .12, "book": .08,
        "wine_bottle": .12}),
    "stove": (15, {"pan": .35, "pot": .3, "kettle": .2}),
    "sink_base": (15, {
        "scrub_brush": .2, "soap_bar": .15, "spray_bottle": .12, "plate": .08, "mug": .08,
        "cup": .06}),
    "bed": (30, {"teddy_bear": .12, "book": .1, "laptop": .08, "blanket": .15, "cushion": .1}),
    "sofa": (25, {
        "cushion": .4, "blanket": .2, "remote_control": .15, "book": .1, "laptop": .06,
        "teddy_bear": .05}),
    "loveseat": (12, {"cushion": .3, "blanket": .15, "book": .08}),
    "arm_chair": (20, {"cushion": .25, "book": .1, "blanket": .08}),
    "ottoman": (10, {"book": .1, "remote_control": .1, "blanket": .1}),
    "dresser": (20, {
        "photo_frame": .25, "vase": .15, "book": .12, "candle": .12, "watch": .1, "wallet": .1,
        "keys": .1, "alarm_clock": .1, "statue": .06, "tissue_box": .08}),
    "storage_cabinet": (12, {
        "box": .3, "towel": .2, "board_game": .15, "book": .1, "basketball": .1,
        "baseball_bat": .08}),
    "bench": (10, {"cushion": .15, "book": .08, "basketball": .06}),
    "chair": (15, {"cushion": .08, "book": .05}),
    "bathtub": (10, {"soap_bar": .12, "towel": .1, "scrub_brush": .06}),
    "towel_stand": (8, {"towel": .5}),
    "piano": (8, {"book": .1, "candle": .08, "photo_frame": .08}),
    "wine_rack": (8, {"wine_bottle": .5, "bottle": .15}),
}

MATERIAL_VARIANTS = {
    "wood": ["oak", "walnut", "pine", "mahogany", "birch", "ebony"],
    "wood_fabric": ["oak_linen", "walnut_wool", "pine_canvas"],
    "wood_small": ["oak", "bamboo", "walnut"],
    "fabric": ["linen_gray", "wool_navy", "velvet_green", "canvas_beige", "corduroy_brown"],
    "fabric_pillow": ["cotton_white", "linen_cream", "velvet_teal", "wool_plaid"],
    "fabric_textile": ["cotton_stripe", "fleece_gray", "wool_check"],
    "fabric_toy": ["plush_brown", "plush_gray"],
    "bed_fabric": ["duvet_white", "duvet_blue", "quilt_patch", "linen_sand"],
    "stone": ["granite_black", "marble_white", "quartz_gray", "soapstone"],
    "stone_decor": ["marble", "bronze_patina", "plaster"],
    "metal": ["steel_brushed", "steel_black", "chrome", "copper"],
    "metal_appliance": ["steel_brushed", "enamel_white", "enamel_black"],
    "metal_cookware": ["steel_polished", "cast_iron", "copper"],
    "metal_utensil": ["steel_polished", "steel_matte"],
    "metal_device": ["aluminum_silver", "aluminum_black"],
    "metal_fixture": ["chrome", "brass", "nickel_brushed"],
    "metal_small": ["steel", "brass"],
    "metal_sport": ["iron_black", "rubber_coated"],
    "ceramic": ["glaze_white", "glaze_blue", "terracotta", "celadon"],
    "ceramic_cup": ["glaze_white", "glaze_red", "stoneware"],
    "ceramic_plate": ["porcelain_white", "stoneware_gray", "glaze_mint"],
    "glass": ["clear", "frosted"],
    "glass_bottle": ["clear", "green", "amber"],
    "glass_small": ["clear", "smoked"],
    "plant": ["monstera", "ficus", "fern", "palm"],
    "plastic_small": ["abs_white", "abs_black", "abs_red"],
    "plastic_bottle": ["hdpe_white", "hdpe_blue"],
    "plastic_sport": ["composite_black"],
    "paper_book": ["cover_red", "cover_blue", "cover_green", "cover_tan"],
    "paper_box": ["print_floral", "print_plain"],
    "paper_roll": ["plain_white"],
    "cardboard": ["kraft", "printed"],
    "wax": ["ivory", "crimson", "sage"],
    "soap": ["lavender", "oat"],
    "rubber_ball": ["orange_classic", "composite_tan"],
    "leather_small": ["leather_brown", "leather_black"],
    "fruit_apple": ["apple_red", "apple_green", "apple_yellow"],
    "fruit_orange": ["orange_navel"],
    "fruit_banana": ["banana_yellow"],
    "food_bread": ["wheat", "sourdough"],
    "food_veg": ["fresh"],
    "food_egg": ["shell_white", "shell_brown"],
}

SOLID_COLORS = [
    [240, 240, 234], [235, 229, 214], [228, 220, 200], [219, 208, 185], [212, 199, 176],
    [246, 241, 233], [233, 236, 233], [224, 228, 221], [209, 216, 206], [196, 205, 194],
    [226, 231, 234], [212, 221, 228], [198, 210, 220], [183, 198, 210], [205, 214, 224],
    [238, 232, 222], [231, 222, 207], [244, 236, 229], [221, 213, 199], [214, 203, 187],
    [234, 224, 218], [226, 212, 204], [217, 200, 191], [238, 228, 224], [229, 217, 212],
    [222, 222, 214], [208, 208, 198], [194, 194, 184], [216, 216, 208], [201, 201, 191],
    [235, 226, 198], [228, 216, 182], [241, 233, 210], [222, 209, 172], [230, 221, 190],
    [210, 196, 182], [199, 183, 168], [190, 173, 157], [205, 190, 175], [181, 163, 146],
]
assert len(SOLID_COLORS) == 40

def lerp(lo, hi, t):
    return lo + (hi - lo) * t

def dims(n, i, wr, hr, dr):
    t = 0.5 if n == 1 else i / (n - 1)
    jitter = lambda: rng.uniform(-0.015, 0.015)
    return {
        "x": round(max(0.01, lerp(*wr, t) + jitter() * (wr[1] - wr[0] + 0.1)), 3),
        "y": round(max(0.008, lerp(*hr, t) + jitter() * (hr[1] - hr[0] + 0.1)), 3),
        "z": round(max(0.01, lerp(*dr, t) + jitter() * (dr[1] - dr[0] + 0.1)), 3),
    }

def splits_for(n):
    if n <= 5:
        return ["any"] * n
    n_val = max(1, n // 6)
    n_test = max(1, n // 6)
    n_train = n - n_val - n_test
    return ["train"] * n_train + ["val"] * n_val + ["test"] * n_test

def main(out_path):
    types = []
    instances = []

    def add_type(name, floor, placements, rw, dup, extra):
        t = {
            "name": name,
            "placeable_on_floor": floor,
            "placements": placements.split() if floor else [],
            "room_weights": {"bedroom": rw[0], "bathroom": rw[1], "kitchen": rw[2],
                             "living_room": rw[3]},
            "allow_duplicates_in_room": dup,
            "material_class": extra.get("material_class", ""),
            "color_randomizable": extra.get("color_randomizable", False),
            "states": extra.get("states", []),
            "object_bias": extra.get("object_bias", 0.0),
            "receptacle_bias": extra.get("receptacle_bias", 0.2),
        }
        if "wall_placement" in extra:
            t["wall_placement"] = extra["wall_placement"]
        if "door_kind" in extra:
            t["door_kind"] = extra["door_kind"]
        types.append(t)

    def add_instances(name, n, wr, hr, dr, receptacle, mountable_idx=()):
        for i, split in enumerate(splits_for(n)):
            inst = {
                "id": f"{name}_{i + 1}",
                "asset_type": name,
                "bbox": dims(n, i, wr, hr, dr),
                "split": split,
                "is_receptacle": receptacle,
            }
            if i in mountable_idx:
                inst["wall_mountable"] = True
            instances.append(inst)

    for name, (pl, rw, dup, rec, n, wr, hr, dr, extra) in FLOOR_TYPES.items():
        add_type(name, True, pl, rw, dup, extra)
        add_instances(name, n, wr, hr, dr, rec)

    for name, (n, wr, hr, dr, extra) in SMALL_TYPES.items():
        add_type(name, False, "", [0, 0, 0, 0], True, extra)
        add_instances(name, n, wr, hr, dr, name == "faucet" and False)

    for name, (n, wr, hr, dr, wall_placement) in WALL_TYPES.items():
        add_type(name, False, "", [0, 0, 0, 0], True,
                 {"material_class": "wood_small", "wall_placement": wall_placement})
        mountable = tuple(range(6)) if name == "television" else ()
        add_instances(name, n, wr, hr, dr, False, mountable)

    for name, (widths, kind) in DOOR_TYPES.items():
        add_type(name, False, "", [0, 0, 0, 0], True, {"material_class": "wood", "door_kind": kind})
        for i, w in enumerate(widths):
            instances.append({
                "id": f"{name}_{i + 1}",
                "asset_type": name,
                "bbox": {"x": w, "y": round(rng.uniform(2.0, 2.1), 3), "z": 0.12},
                "split": "any",
                "is_receptacle": False,
            })

    materials = {
        "solid_colors": SOLID_COLORS,
        "wall_textures": [f"wall_{kind}_{i:02d}" for kind, count in
                          [("drywall", 30), ("plaster", 20), ("brick", 16), ("tile", 16),
                           ("panel", 14), ("wallpaper", 26)] for i in range(1, count + 1)],
        "floor_materials": [f"floor_{kind}_{i:02d}" for kind, count in
                            [("wood", 25), ("tile", 12), ("stone", 8), ("carpet", 10)]
                            for i in range(1, count + 1)],
        "skyboxes": {
            "midday": [f"sky_midday_{i:02d}" for i in range(1, 17)],
            "golden_hour": [f"sky_golden_{i:02d}" for i in range(1, 6)],
            "blue_hour": ["sky_blue_01"],
        },
        "object_materials": {cls: [f"{cls}__{v}" for v in variants]
                             for cls, variants in MATERIAL_VARIANTS.items()},
    }
    assert len(materials["wall_textures"]) == 122
    assert len(materials["floor_materials"]) == 55

    spawn_table = []
    for receptacle, (total, objs) in sorted(SPAWN.items()):
        for obj, p in sorted(objs.items()):
            spawn_table.append({
                "receptacle": receptacle,
                "object": obj,
                "occurrences": max(1, round(p * total)),
                "receptacle_count": total,
            })

    all_ids = lambda t: [i["id"] for i in instances if i["asset_type"] == t]

    def sag(id_, placements, rw, samplers, edges, links=()):
        return {
            "id": id_,
            "placements": placements.split(),
            "room_weights": {"bedroom": rw[0], "bathroom": rw[1], "kitchen": rw[2],
                             "living_room": rw[3]},
            "samplers": [{"id": s, "asset_type": t, "candidates": all_ids(t)}
                         for s, t in samplers],
            "edges": [dict(zip(
                ["parent", "child", "anchor_v", "anchor_h", "pivot_v", "pivot_h", "offset",
                 "rotation", "on_top", "allow_overlap"], e)) for e in edges],
            "links": [list(l) for l in links],
        }

    sags = [
        sag("dining_table_four_chairs", "middle", [0, 0, 2, 2],
            [("table", "dining_table"), ("chair_n1", "chair"), ("chair_n2", "chair"),
             ("chair_s1", "chair"), ("chair_s2", "chair")],
            [("table", "chair_n1", "top", "center", "bottom", "center", [-0.45, -0.1], 180, False, True),
             ("table", "chair_n2", "top", "center", "bottom", "center", [0.45, -0.1], 180, False, True),
             ("table", "chair_s1", "bottom", "center", "top", "center", [-0.45, 0.1], 0, False, True),
             ("table", "chair_s2", "bottom", "center", "top", "center", [0.45, 0.1], 0, False, True)],
            [("chair_n1", "chair_n2", "chair_s1", "chair_s2")]),
        sag("dining_table_two_chairs", "middle", [0, 0, 2, 1],
            [("table", "dining_table"), ("chair_n", "chair"), ("chair_s", "chair")],
            [("table", "chair_n", "top", "center", "bottom", "center", [0, -0.1], 180, False, True),
             ("table", "chair_s", "bottom", "center", "top", "center", [0, 0.1], 0, False, True)],
            [("chair_n", "chair_s")]),
        sag("bed_two_pillows", "edge corner", [3, 0, 0, 0],
            [("bed", "bed"), ("pillow_l", "pillow"), ("pillow_r", "pillow")],
            [("bed", "pillow_l", "bottom", "left", "bottom", "left", [0.08, 0.05], 0, True, False),
             ("bed", "pillow_r", "bottom", "right", "bottom", "right", [-0.08, 0.05], 0, True, False)],
            [("pillow_l", "pillow_r")]),
        sag("bed_nightstand", "edge corner", [2, 0, 0, 0],
            [("bed", "bed"), ("stand", "side_table")],
            [("bed", "stand", "bottom", "left", "bottom", "right", [-0.04, 0], 0, False, False)]),
        sag("bed_two_nightstands", "edge", [2, 0, 0, 0],
            [("bed", "bed"), ("stand_l", "side_table"), ("stand_r", "side_table")],
            [("bed", "stand_l", "bottom", "left", "bottom", "right", [-0.04, 0], 0, False, False),
             ("bed", "stand_r", "bottom", "right", "bottom", "left", [0.04, 0], 0, False, False)],
            [("stand_l", "stand_r")]),
        sag("tv_stand_television", "edge", [1, 0, 0, 2],
            [("stand", "tv_stand"), ("tv", "television")],
            [("stand", "tv", "center", "center", "center", "center", [0, 0], 0, True, False)]),
        sag("living_set", "edge", [0, 0, 0, 2],
            [("stand", "tv_stand"), ("tv", "television"), ("sofa", "sofa")],
            [("stand", "tv", "center", "center", "center", "center", [0, 0], 0, True, False),
             ("stand", "sofa", "top", "center", "bottom", "center", [0, 1.7], 180, False, False)]),
        sag("sofa_coffee_table", "edge middle", [0, 0, 0, 2],
            [("sofa", "sofa"), ("table", "coffee_table")],
            [("sofa", "table", "top", "center", "bottom", "center", [0, 0.45], 0, False, False)]),
        sag("sofa_table_armchair", "middle edge", [0, 0, 0, 2],
            [("sofa", "sofa"), ("table", "coffee_table"), ("chair", "arm_chair")],
            [("sofa", "table", "top", "center", "bottom", "center", [0, 0.45], 0, False, False),
             ("table", "chair", "center", "right", "center", "left", [0.35, 0], 270, False, False)]),
        sag("armchair_floor_lamp", "corner edge", [1, 0, 0, 2],
            [("chair", "arm_chair"), ("lamp", "floor_lamp")],
            [("chair", "lamp", "center", "right", "center", "left", [0.05, 0], 0, False, False)]),
        sag("armchair_house_plant", "corner", [0, 0, 0, 1],
            [("chair", "arm_chair"), ("plant", "house_plant")],
            [("chair", "plant", "center", "left", "center", "right", [-0.05, 0], 0, False, False)]),
        sag("desk_chair_lamp", "edge", [2, 0, 0, 1],
            [("desk", "desk"), ("chair", "chair"), ("lamp", "desk_lamp")],
            [("desk", "chair", "top", "center", "bottom", "center", [0, -0.15], 180, False, True),
             ("desk", "lamp", "bottom", "left", "bottom", "left", [0.08, 0.12], 0, True, False)]),
        sag("vanity_faucet", "edge", [0, 3, 0, 0],
            [("vanity", "bathroom_vanity"), ("faucet", "faucet")],
            [("vanity", "faucet", "bottom", "center", "center", "center", [0, 0.1], 0, True, False)]),
        sag("sink_faucet", "edge", [0, 0, 2, 0],
            [("sink", "sink_base"), ("faucet", "faucet")],
            [("sink", "faucet", "bottom", "center", "center", "center", [0, 0.1], 0, True, False)]),
        sag("kitchen_island_stools", "middle", [0, 0, 1, 0],
            [("island", "kitchen_island"), ("stool_1", "bar_stool"), ("stool_2", "bar_stool")],
            [("island", "stool_1", "bottom", "center", "top", "center", [-0.35, 0.1], 0, False, True),
             ("island", "stool_2", "bottom", "center", "top", "center", [0.35, 0.1], 0, False, True)],
            [("stool_1", "stool_2")]),
        sag("dresser_decor", "edge", [2, 0, 0, 0],
            [("dresser", "dresser"), ("vase", "vase"), ("frame", "photo_frame")],
            [("dresser", "vase", "center", "left", "center", "center", [0.15, 0], 0, True, False),
             ("dresser", "frame", "center", "right", "center", "center", [-0.15, 0], 0, True, False)]),
        sag("toilet_tp_stand", "edge corner", [0, 2, 0, 0],
            [("toilet", "toilet"), ("tp", "toilet_paper_stand")],
            [("toilet", "tp", "center", "right", "center", "left", [0.03, 0], 0, False, False)]),
        sag("bookcase_pair", "edge", [1, 0, 0, 1],
            [("case_1", "bookcase"), ("case_2", "bookcase")],
            [("case_1", "case_2", "center", "right", "center", "left", [0.01, 0], 0, False, False)],
            [("case_1", "case_2")]),
    ]
    assert len(sags) == 18

    catalog = {
        "schema_version": 1,
        "asset_types": types,
        "asset_instances": instances,
        "materials": materials,
        "spawn_table": spawn_table,
        "semantic_asset_groups": sags,
    }
    with open(out_path, "w") as f:
        json.dump(catalog, f, indent=1, sort_keys=True)
        f.write("\n")
    print(f"{out_path}: {len(types)} types, {len(instances)} instances, "
          f"{len(spawn_table)} spawn entries, {len(sags)} groups")

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/catalog.json")
