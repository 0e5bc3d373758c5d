#!/usr/bin/env python3
# Copyright 2026 The numview Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the reconstructed seed corpus and template inventory fixtures.

The fixtures stand in for the released data: they reproduce its published
operation distributions (1,111 seeds over nine signatures and 326 templates
over twenty shapes) with synthetic question language. Output is fully
determined by the fixed seed below.

    python3 data/make_fixtures.py data/fixtures
"""

import json
import os
import random
import sys
from fractions import Fraction

RNG = random.Random(20230511)

NAMES = [
    "Adam", "Bella", "Carlos", "Dana", "Elif", "Farah", "Gus", "Hana", "Ivan",
    "Jada", "Kofi", "Lena", "Mateo", "Nina", "Omar", "Priya", "Quinn", "Rosa",
    "Sam", "Tariq", "Uma", "Victor", "Wen", "Ximena", "Yusuf", "Zoe", "Alma",
    "Bruno", "Chloe", "Dev",
]
ITEMS = [
    "apples", "pencils", "marbles", "stickers", "cookies", "books", "shells",
    "stamps", "cards", "balloons", "crayons", "buttons", "oranges", "beads",
    "toy cars", "erasers", "cupcakes", "flowers", "rocks", "coins",
]
PLACES = [
    "basket", "box", "jar", "drawer", "bag", "bowl", "crate", "shelf",
    "bucket", "cupboard",
]

# Seed frames: text with {n1}.. in reading order and the slot expression.
SEED_FRAMES = {
    "a+b": [
        ("{name} has {n1} {items}. {name} buys {n2} more {items}. How many {items} does {name} have now?", "num1 + num2"),
        ("There are {n1} {items} in the {place} and {n2} {items} on the table. How many {items} are there in total?", "num1 + num2"),
        ("{name} picked {n1} {items} in the morning and {n2} {items} in the afternoon. How many {items} did {name} pick altogether?", "num1 + num2"),
        ("{name} found {n1} {items} near the {place}. A friend gave {name} {n2} {items}. How many {items} does {name} have?", "num1 + num2"),
    ],
    "a-b": [
        ("{n1} {items} were in the {place}. {name} took {n2} of them. How many {items} are left in the {place}?", "num1 - num2"),
        ("{name} wants {n1} {items} but only has {n2}. How many more {items} does {name} need?", "num1 - num2"),
        ("{name} has {n1} {items}. {other} has {n2} {items}. How many more {items} does {other} have than {name}?", "num2 - num1"),
        ("{name} had {n1} {items} in a {place} and gave {n2} of them away. How many {items} does {name} still have?", "num1 - num2"),
    ],
    "a*b": [
        ("{name} has {n1} boxes. Each box holds {n2} {items}. How many {items} does {name} have?", "num1 * num2"),
        ("Each {place} holds {n1} {items}. How many {items} are in {n2} of them?", "num1 * num2"),
        ("{name} packs {n1} {items} into each of {n2} bags. How many {items} are packed?", "num1 * num2"),
    ],
    "a/b": [
        ("{name} has {n1} {items} to share equally among {n2} friends. How many {items} does each friend get?", "num1 / num2"),
        ("{n1} friends share {n2} {items} equally. How many {items} does each friend get from {name}?", "num2 / num1"),
        ("{name} puts {n1} {items} into groups of {n2}. How many groups does {name} make?", "num1 / num2"),
    ],
    "(a+b)-c": [
        ("{name} had {n1} {items} and found {n2} more. Then {name} gave {n3} to {other}. How many {items} does {name} have now?", "num1 + num2 - num3"),
        ("There were {n1} {items} in the {place}. {name} added {n2} and {other} removed {n3}. How many {items} are in the {place}?", "( num1 + num2 ) - num3"),
    ],
    "a*(b+c)": [
        ("{name} bought {n1} packs. Each pack has {n2} red {items} and {n3} blue {items}. How many {items} did {name} buy?", "num1 * ( num2 + num3 )"),
        ("Each {place} has {n1} small {items} and {n2} large {items}. How many {items} are in {n3} of them?", "( num1 + num2 ) * num3"),
    ],
    "(a+b)/c": [
        ("{name} has {n1} red {items} and {n2} blue {items}. {name} puts them equally into {n3} bags. How many {items} are in each bag?", "( num1 + num2 ) / num3"),
        ("{name} collected {n1} {items} and {other} collected {n2}. They split them equally among {n3} children. How many does each child get?", "( num1 + num2 ) / num3"),
    ],
    "a*(b-c)": [
        ("{name} buys {n1} boxes. Each box had {n2} {items}, but {n3} from each box were broken. How many good {items} are there?", "num1 * ( num2 - num3 )"),
        ("Each {place} holds {n1} {items} and {n2} of them are sold. How many {items} are left in {n3} of them?", "( num1 - num2 ) * num3"),
    ],
    "(a-b)/c": [
        ("{name} had {n1} {items} and lost {n2}. The rest were shared equally among {n3} friends. How many did each friend get?", "( num1 - num2 ) / num3"),
        ("A {place} had {n1} {items}. {name} used {n2} of them and packed the rest into bags of {n3}. How many bags did {name} fill?", "( num1 - num2 ) / num3"),
    ],
}

SEED_COUNTS = [
    ("a+b", 154), ("a-b", 162), ("a*b", 113), ("a/b", 102),
    ("(a+b)-c", 190), ("a*(b+c)", 100), ("(a+b)/c", 90),
    ("a*(b-c)", 100), ("(a-b)/c", 100),
]


def small():
    # Mostly one and two digit integers.
    return RNG.choice([RNG.randint(1, 9), RNG.randint(2, 99), RNG.randint(2, 99)])


def fmt(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    # Terminating by construction.
    for scale in range(1, 13):
        scaled = value * 10 ** scale
        if scaled.denominator == 1:
            digits = str(abs(scaled.numerator)).rjust(scale + 1, "0")
            sign = "-" if scaled.numerator < 0 else ""
            return sign + digits[:-scale] + "." + digits[-scale:]
    raise ValueError(value)


def evaluate(expression, values):
    env = {f"num{i + 1}": Fraction(v) for i, v in enumerate(values)}
    return eval(expression, {"__builtins__": {}}, env)


def draw_numbers(shape, index):
    """Numbers in slot order (num1, num2, ...) following corpus conventions."""
    if shape == "a+b":
        if index % 40 == 7:
            v = RNG.randint(2, 9)
            return [v, v]
        if index % 25 == 3:
            return [RNG.randint(10000, 99999), RNG.randint(100, 9999)]
        if index % 30 == 11:
            return [Fraction(RNG.randint(11, 95), 100), Fraction(RNG.randint(1, 9), 10)]
        return [small(), small()]
    if shape == "a-b":
        if index % 30 == 5:
            a = RNG.randint(10000, 99999)
            return [a, RNG.randint(100, a - 1)]
        if index % 35 == 9:
            a = Fraction(RNG.randint(50, 400), 100)
            return [a, Fraction(RNG.randint(1, int(a * 100) - 1), 100)]
        a = RNG.randint(3, 99)
        return [a, RNG.randint(1, a - 1)]
    if shape == "a*b":
        if index % 30 == 13:
            return [Fraction(RNG.randint(11, 95), 100), RNG.randint(2, 9)]
        if index % 35 == 2:
            v = RNG.randint(2, 12)
            return [v, v]
        return [RNG.randint(2, 12), RNG.randint(2, 30)]
    if shape == "a/b":
        b = RNG.randint(2, 12)
        return [b * RNG.randint(2, 12), b]
    if shape == "(a+b)-c":
        a, b = small(), small()
        if index % 45 == 4:
            b = a
        return [a, b, RNG.randint(1, a + b)]
    if shape == "a*(b+c)":
        return [RNG.randint(2, 12), small(), small()]
    if shape == "(a+b)/c":
        c = RNG.randint(2, 12)
        total = c * RNG.randint(2, 15)
        a = RNG.randint(1, total - 1)
        return [a, total - a, c]
    if shape == "a*(b-c)":
        b = RNG.randint(3, 60)
        return [RNG.randint(2, 12), b, RNG.randint(1, b - 1)]
    if shape == "(a-b)/c":
        c = RNG.randint(2, 12)
        rest = c * RNG.randint(1, 12)
        b = RNG.randint(1, 40)
        return [rest + b, b, c]
    raise ValueError(shape)


def make_seeds():
    seeds = []
    seen_language = set()
    counter = 0
    beavers_done = False
    for shape, count in SEED_COUNTS:
        frames = SEED_FRAMES[shape]
        produced = 0
        while produced < count:
            if shape == "a-b" and not beavers_done:
                text = ("{n1} beavers were working on their home. {n2} went for a swim. "
                        "How many beavers are still working on their home?")
                expression = "num1 - num2"
                values = [89, 30]
                beavers_done = True
                fill = {}
            else:
                text, expression = frames[produced % len(frames)]
                names = RNG.sample(NAMES, 2)
                fill = {
                    "name": names[0], "other": names[1],
                    "items": RNG.choice(ITEMS), "place": RNG.choice(PLACES),
                }
                language = text.format(n1="#", n2="#", n3="#", **fill)
                if language in seen_language:
                    continue
                seen_language.add(language)
                slot_values = draw_numbers(shape, produced)
                # Frames may reference slots out of reading order; numbers are
                # listed in reading order, and slot k is the k-th listed number.
                values = list(slot_values)
                if expression == "num2 - num1" or expression == "num2 / num1":
                    values = [slot_values[1], slot_values[0]]
                elif expression.endswith(") * num3"):
                    values = [slot_values[1], slot_values[2], slot_values[0]]
            question, numbers = render_seed(text, fill, values)
            answer = evaluate(expression, values)
            counter += 1
            seeds.append({
                "id": f"seed-{counter:04d}",
                "question": question,
                "numbers": numbers,
                "expression": expression,
                "answer": fmt(answer),
            })
            produced += 1
    return seeds


def render_seed(text, fill, values):
    numbers = []
    cursor = 0
    out = ""
    template = text
    for key, value in fill.items():
        template = template.replace("{" + key + "}", value)
    while True:
        start = template.find("{n", cursor)
        if start < 0:
            out += template[cursor:]
            break
        end = template.index("}", start)
        slot = int(template[start + 2:end])
        out += template[cursor:start]
        surface = fmt(values[slot - 1])
        numbers.append({"surface": surface, "span": [len(out), len(out) + len(surface)]})
        out += surface
        cursor = end + 1
    return out, numbers


# Template inventory -------------------------------------------------------

TEMPLATE_TOTALS = [
    ("a+b", 16), ("a-b", 28), ("a*b", 28), ("a/b", 35), ("(a+b)+c", 9),
    ("(a+b)-c", 23), ("a*(b+c)", 20), ("a*(b-c)", 13), ("(a+b)/c", 20),
    ("(a-b)/c", 17), ("(a-b)-c", 3), ("(a/b)+c", 3), ("(a*b)+c", 13),
    ("(a*b)-c", 5), ("(a*b)*c", 10), ("(a*b)/c", 51), ("a/(b+c)", 6),
    ("a/(b-c)", 8), ("a*(b/c)", 6), ("(a/b)*c", 12),
]
EXPERT_COUNTS = {
    "a+b": 10, "a-b": 10, "a*b": 10, "a/b": 10, "(a+b)+c": 9, "(a+b)-c": 11,
    "a*(b+c)": 10, "a*(b-c)": 10, "(a+b)/c": 10, "(a-b)/c": 10,
}

EXPERT_FRAMES = {
    "a+b": [
        ("{name} has num1 {items}. {name} buys another num2 . How many {items} does {name} have?", "num1 + num2"),
        ("A {place} holds num1 {items} and another {place} holds num2 {items}. How many {items} are there altogether?", "num1 + num2"),
    ],
    "a-b": [
        ("{name} had num1 {items} and gave num2 to a friend. How many {items} are left?", "num1 - num2"),
        ("A {place} contains num1 {items}. After {name} removes some there are num2 . How many were removed?", "num1 - num2"),
    ],
    "a*b": [
        ("{name} fills num1 {place}s with num2 {items} each. How many {items} are used?", "num1 * num2"),
        ("One {place} weighs num1 kg. How much do num2 of them weigh?", "num1 * num2"),
    ],
    "a/b": [
        ("{name} shares num1 {items} equally between num2 friends. How many does each friend receive?", "num1 / num2"),
        ("A rope of num1 metres is cut into pieces of num2 metres. How many pieces are there?", "num1 / num2"),
    ],
    "(a+b)+c": [
        ("{name} scored num1 points, then num2 points, then num3 points. What is the total score?", "num1 + num2 + num3"),
    ],
    "(a+b)-c": [
        ("{name} has num1 {items} and receives num2 more, then loses num3 . How many {items} remain?", "num1 + num2 - num3"),
        ("The temperature was num1 degrees and increases by num2 degrees before dropping by num3 degrees. What is the temperature now?", "( num1 + num2 ) - num3"),
    ],
    "a*(b+c)": [
        ("{name} buys num1 tickets that cost num2 pounds plus a fee of num3 pounds each. What is the total cost?", "num1 * ( num2 + num3 )"),
    ],
    "a*(b-c)": [
        ("Each of num1 {place}s held num2 {items} until num3 were taken from each. How many {items} are left in total?", "num1 * ( num2 - num3 )"),
    ],
    "(a+b)/c": [
        ("{name} saves num1 pounds and earns another num2 pounds, then splits it equally into num3 envelopes. How much goes in each envelope?", "( num1 + num2 ) / num3"),
    ],
    "(a-b)/c": [
        ("A tank holds num1 litres and num2 litres leak out. The rest is poured equally into num3 jugs. How much is in each jug?", "( num1 - num2 ) / num3"),
    ],
}

# Lowercase, tokenised phrasing in the style of the recovered corpora.
CORPUS_FRAMES = {
    "a+b": [("a {place} has num1 {items} and num2 more are added . how many {items} are in the {place} ?", "( num1 + num2 )")],
    "a-b": [("{name} had num1 {items} and sold num2 of them . how many {items} are left ?", "( num1 - num2 )")],
    "a*b": [("a shop sells num1 {items} at $ num2 each . what is the total revenue ?", "( num1 * num2 )")],
    "a/b": [
        ("a trader sells num1 meters of cloth for $ num2 . what is the cost price of one metre of cloth ?", "( num2 / num1 )"),
        ("{name} drives num1 km in num2 hours . what is the average speed ?", "( num1 / num2 )"),
    ],
    "(a+b)-c": [("a bus has num1 passengers , num2 get on and num3 get off . how many passengers are on the bus ?", "( ( num1 + num2 ) - num3 )")],
    "a*(b+c)": [("num1 workers each earn $ num2 plus a bonus of $ num3 . what is the total paid ?", "( num1 * ( num2 + num3 ) )")],
    "a*(b-c)": [("num1 boxes each hold num2 {items} but num3 in each are damaged . how many {items} are undamaged ?", "( num1 * ( num2 - num3 ) )")],
    "(a+b)/c": [("the sum of num1 and num2 is shared equally among num3 people . how much does each get ?", "( ( num1 + num2 ) / num3 )")],
    "(a-b)/c": [("a tank of num1 liters loses num2 liters and the rest fills num3 equal bottles . how much does each bottle hold ?", "( ( num1 - num2 ) / num3 )")],
    "(a-b)-c": [("{name} had $ num1 , spent $ num2 on {items} and $ num3 on lunch . how much money is left ?", "( ( num1 - num2 ) - num3 )")],
    "(a/b)+c": [("a car uses num1 liters for num2 km and then num3 more liters . what is the per km use plus the extra ?", "( ( num1 / num2 ) + num3 )")],
    "(a*b)+c": [
        ("the average weight of num1 persons increases by num2 kg when a new person comes in place of one of them weighing num3 kg . what might be the weight of the new person ?", "( num3 +( num1*num2 ))"),
        ("a phone plan costs $ num1 per month for num2 months plus a fee of $ num3 . what is the total cost ?", "( ( num1 * num2 ) + num3 )"),
    ],
    "(a*b)-c": [("{name} buys num1 {items} at $ num2 each and uses a coupon of $ num3 . what is paid ?", "( ( num1 * num2 ) - num3 )")],
    "(a*b)*c": [("a room is num1 m long , num2 m wide and num3 m high . what is its volume ?", "( ( num1 * num2 ) * num3 )")],
    "(a*b)/c": [
        ("num1 workers finish a job in num2 days . how many days would num3 workers take ?", "( ( num1 * num2 ) / num3 )"),
        ("a recipe uses num1 cups of flour for num2 cakes . how much flour is needed for num3 cakes ?", "( ( num1 * num3 ) / num2 )"),
    ],
    "a/(b+c)": [("num1 {items} are split between two groups of num2 and num3 children equally . how many does each child get ?", "( num1 / ( num2 + num3 ) )")],
    "a/(b-c)": [("a boat goes num1 km at num2 km/h against a current of num3 km/h . how long does it take ?", "( num1 / ( num2 - num3 ) )")],
    "a*(b/c)": [("a map uses num1 cm for every num2 km . how many cm represent num3 km ?", "( num3 * ( num1 / num2 ) )")],
    "(a/b)*c": [("num1 {items} cost $ num2 . what do num3 {items} cost ?", "( ( num2 / num1 ) * num3 )")],
}


def make_templates():
    expert = []
    rest = []
    for shape, total in TEMPLATE_TOTALS:
        n_expert = EXPERT_COUNTS.get(shape, 0)
        for i in range(n_expert):
            text, expression = EXPERT_FRAMES[shape][i % len(EXPERT_FRAMES[shape])]
            expert.append((shape, fill_template(text), expression))
        for i in range(total - n_expert):
            text, expression = CORPUS_FRAMES[shape][i % len(CORPUS_FRAMES[shape])]
            rest.append((shape, fill_template(text), expression))
    # The Britney exemplar replaces the first expert a+b template verbatim.
    expert[0] = ("a+b", "Britney has num1 knitting needles. She buys another num2 . How many needles does she have?", "num1 + num2")
    gsm8k_exemplar = next(t for t in rest if t[1].startswith("a trader sells"))
    aqua_exemplar = next(t for t in rest if t[1].startswith("the average weight"))
    rest = [t for t in rest if t is not gsm8k_exemplar and t is not aqua_exemplar]
    RNG.shuffle(rest)
    # AQUA takes a two-hop-heavy slice; GSM8K takes the remainder.
    two_hop = [t for t in rest if len(t[0]) > 3]
    one_hop = [t for t in rest if len(t[0]) == 3]
    aqua = [aqua_exemplar] + two_hop[:70]
    gsm8k = [gsm8k_exemplar] + two_hop[70:] + one_hop
    assert len(expert) == 100 and len(gsm8k) == 155 and len(aqua) == 71
    records = []
    for source, group in (("expert", expert), ("gsm8k", gsm8k), ("aqua", aqua)):
        for i, (_, text, expression) in enumerate(group):
            records.append({"id": f"{source}-{i + 1:03d}", "source": source,
                            "text": text, "expression": expression})
    return records


def fill_template(text):
    names = RNG.sample(NAMES, 1)
    return text.format(name=names[0], items=RNG.choice(ITEMS), place=RNG.choice(PLACES))


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "fixtures")
    os.makedirs(out_dir, exist_ok=True)
    seeds = make_seeds()
    templates = make_templates()
    with open(os.path.join(out_dir, "seeds.jsonl"), "w", encoding="utf-8") as f:
        for s in seeds:
            f.write(json.dumps(s, ensure_ascii=False) + "\n")
    with open(os.path.join(out_dir, "templates.jsonl"), "w", encoding="utf-8") as f:
        for t in templates:
            f.write(json.dumps(t, ensure_ascii=False) + "\n")
    print(f"{len(seeds)} seeds, {len(templates)} templates -> {out_dir}")


if __name__ == "__main__":
    main()
