#!/usr/bin/env python3
"""Generate the bundled synthetic sample corpus.

Writes crates/core/data/sample_corpus.jsonl: tweet-like records with ids,
timestamps over roughly two months, authors, and city names. The mix covers
single-emotion posts, mixed posts, negated posts, emoticon-only posts,
neutral chatter, link/hashtag/mention noise and retweets of earlier posts.
Output is fully determined by SEED.
"""

import json
import random
from datetime import datetime, timedelta, timezone
from pathlib import Path

SEED = 20150601
N_ORIGINAL = 4850
ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "crates" / "core" / "data"

CATEGORIES = ["HAPPINESS", "SADNESS", "FEAR", "ANGER", "SURPRISE", "DISGUST"]
# share of single-emotion posts per category; happiness dominates
WEIGHTS = [0.30, 0.17, 0.14, 0.16, 0.12, 0.11]

CONTEXT = {
    "HAPPINESS": "birthday party beach weekend vacation holiday friends family dinner concert "
                 "sunshine promotion wedding puppy festival picnic music dance gift trip",
    "SADNESS": "funeral goodbye breakup rain loss hospital memories farewell grandma "
               "alone distance divorce empty lonely night failure rejection letter",
    "FEAR": "exam interview spider darkness ghost storm earthquake surgery results "
            "deadline flight haunted alley thunder snake injection border",
    "ANGER": "traffic delay customer service politician queue landlord refund potholes "
             "powercut broadband bill corruption neighbour noise referee strike",
    "SURPRISE": "news announcement result twist ending lottery guest reveal package "
                "plot cameo trailer reunion proposal upset scoreline",
    "DISGUST": "garbage smell toilet drain leftovers cockroach sewage spit stains vomit "
               "mould fridge sneakers litter canteen hygiene",
}
GENERIC = ("today tonight morning evening week day time people city office college home "
           "phone movie match train bus road weather coffee lunch work class").split()
NAMES = "Rahul Priya Amit Neha Arjun Sneha Vikram Anjali Rohan Kavya".split()
HIGH = "so very really totally extremely super absolutely".split()
LOW = "slightly somewhat kinda fairly".split()
NEG = "not never hardly".split()
NOISE_TAGS = "#mood #life #india #monday #fail #blessed #random #news".split()

FIRST = [
    "I am {d}{w} about the {c}",
    "I feel {d}{w} after the {c} {g}",
    "feeling {d}{w} this {g}, {c} again",
    "my {c} made me {d}{w}",
    "{c} {g} and I'm {d}{w}",
    "we were {d}{w} at the {c}",
    "I was {d}{w} when the {c} happened",
    "the {c} {g}. I am {d}{w}",
]
SECOND = [
    "you look {d}{w} after the {c}",
    "are you {d}{w} about the {c} {g}?",
]
THIRD = [
    "met {n} at the {c}, she is {d}{w}",
    "{g} {n} was {d}{w} about the {c}",
    "they were {d}{w} after the {c}",
    "he seems {d}{w} about the {c} {g}",
]
NEUTRAL = [
    "heading to the {g} {c2} now",
    "anyone know the {g} schedule for the {c2}",
    "the {c2} {g} is at five",
    "just got back from the {c2}",
    "{g} update: {c2} moved to next week",
]


def load_lexicon():
    words = {c: [] for c in CATEGORIES}
    emoticons = {c: [] for c in CATEGORIES}
    for line in (DATA / "lexicon.tsv").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        f = line.split("\t")
        (emoticons if len(f) == 4 else words)[f[1]].append(f[0])
    return words, emoticons


def load_seeds():
    seeds = {c: [] for c in CATEGORIES}
    for line in (DATA / "seeds.tsv").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            surface, cat = line.split("\t")
            seeds[cat].append(surface)
    return seeds


def zipf_pick(rng, items):
    # rank-weighted choice, weight 1/(rank+1)
    weights = [1.0 / (i + 1) for i in range(len(items))]
    return rng.choices(items, weights=weights, k=1)[0]


class Gen:
    def __init__(self):
        self.rng = random.Random(SEED)
        self.words, self.emoticons = load_lexicon()
        # fixed per-run popularity order
        for table in (self.words, self.emoticons):
            for c in CATEGORIES:
                self.rng.shuffle(table[c])
        self.context = {c: CONTEXT[c].split() for c in CATEGORIES}
        # posts were collected by querying seed terms, so seeds are common
        seeds = load_seeds()
        self.seed_words = {c: [s for s in seeds[c] if s in self.words[c]] for c in CATEGORIES}

    def emotion_word(self, cat):
        if self.rng.random() < 0.55 and self.seed_words[cat]:
            return zipf_pick(self.rng, self.seed_words[cat])
        return zipf_pick(self.rng, self.words[cat])

    def degree(self):
        r = self.rng.random()
        if r < 0.25:
            return self.rng.choice(HIGH) + " "
        if r < 0.32:
            return self.rng.choice(LOW) + " "
        return ""

    def clause(self, cat, negate=False):
        rng = self.rng
        r = rng.random()
        pool = FIRST if r < 0.7 else SECOND if r < 0.8 else THIRD
        d = rng.choice(NEG) + " " if negate else self.degree()
        return rng.choice(pool).format(
            d=d,
            w=self.emotion_word(cat),
            c=rng.choice(self.context[cat]),
            g=rng.choice(GENERIC),
            n=rng.choice(NAMES),
        )

    def decorate(self, text, cat):
        rng = self.rng
        if cat and rng.random() < 0.25:
            text += " " + zipf_pick(rng, self.emoticons[cat])
        if rng.random() < 0.15:
            text += " " + rng.choice(NOISE_TAGS)
        if rng.random() < 0.08:
            text += " http://t.co/" + "".join(rng.choices("abcdefghjkmnpqrstuvwxyz0123456789", k=8))
        if rng.random() < 0.10:
            text = "@" + rng.choice(NAMES).lower() + " " + text
        if rng.random() < 0.3:
            text = text[0].upper() + text[1:]
        return text

    def text(self):
        rng = self.rng
        r = rng.random()
        cat = rng.choices(CATEGORIES, weights=WEIGHTS, k=1)[0]
        if r < 0.10:
            t = rng.choice(NEUTRAL).format(g=rng.choice(GENERIC), c2=rng.choice(self.context[cat]))
            return self.decorate(t, None)
        if r < 0.13:
            # negated happiness, sadness or anger
            cat = rng.choice(["HAPPINESS", "SADNESS", "ANGER"])
            return self.decorate(self.clause(cat, negate=True), None)
        if r < 0.18:
            # emoticon-only post with context
            t = rng.choice(self.context[cat]) + " " + rng.choice(GENERIC) + " " + zipf_pick(rng, self.emoticons[cat])
            return t
        if r < 0.33:
            other = rng.choice([c for c in CATEGORIES if c != cat])
            t = self.clause(cat) + ". " + self.clause(other)
            return self.decorate(t, cat if rng.random() < 0.5 else None)
        t = self.clause(cat)
        if rng.random() < 0.35:
            t += ". " + self.clause(cat)
        return self.decorate(t, cat)


def main():
    gen = Gen()
    rng = gen.rng
    cities = [l.split("\t")[0] for l in (DATA / "locations.tsv").read_text().splitlines()
              if l.strip() and not l.startswith("#")]
    users = [f"user{i:03d}" for i in range(300)]
    start = datetime(2015, 3, 1, tzinfo=timezone.utc)
    records = []
    for i in range(N_ORIGINAL):
        ts = start + timedelta(seconds=rng.randrange(60 * 24 * 3600))
        user = "moodswing_maya" if rng.random() < 0.04 else rng.choice(users)
        rec = {"id": f"t{i + 1:05d}", "text": gen.text(),
               "created_at": ts.strftime("%Y-%m-%dT%H:%M:%SZ"), "user": user}
        if rng.random() < 0.7:
            rec["location"] = rng.choice(cities) if rng.random() < 0.93 else "Atlantis"
        records.append(rec)
    # retweets of earlier posts, posted later
    for j in range(150):
        src = rng.choice(records[:N_ORIGINAL])
        ts = datetime.strptime(src["created_at"], "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=timezone.utc)
        ts += timedelta(minutes=rng.randrange(1, 3000))
        records.append({"id": f"rt{j + 1:04d}", "text": f"RT @{src['user']}: {src['text']}",
                        "created_at": ts.strftime("%Y-%m-%dT%H:%M:%SZ"), "user": rng.choice(users)})
    records.sort(key=lambda r: (r["created_at"], r["id"]))
    with open(DATA / "sample_corpus.jsonl", "w") as out:
        for rec in records:
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
    print(f"wrote {len(records)} records")


if __name__ == "__main__":
    main()
