#!/usr/bin/env python3
"""Generate the bundled URI-path corpus and its context-id table.

Paths look like crawled web URLs turned into names: the host (authority) is
the first component, followed by ordinary path segments. Every component is
1..15 bytes so the stateless encoder never needs its fallback.

The output is deterministic for a given --seed.
"""

import argparse
import random

HOSTS = [
    "example.com", "example.org", "www.bbc.co.uk", "github.com", "gitlab.com",
    "ycombinator.com", "www.heise.de", "www.nytimes.com", "www.spiegel.de",
    "arxiv.org", "www.ietf.org", "datatracker", "www.w3.org", "docs.python.org",
    "www.amazon.de", "www.ebay.com", "www.reddit.com", "stackoverflow", "www.imdb.com",
    "www.zalando.de", "www.ikea.com", "www.apple.com", "www.golem.de", "www.lemonde.fr",
    "www.tagesschau", "www.zeit.de", "www.faz.net", "www.kicker.de", "www.chip.de",
    "www.bahn.de", "www.dwd.de", "www.nasa.gov", "www.cern.ch", "www.mpg.de",
    "www.tum.de", "fu-berlin.de", "www.haw-hh.de", "www.riot-os.org", "named-data.net",
    "www.npmjs.com", "crates.io", "pypi.org", "www.debian.org", "kernel.org",
    "www.gnu.org", "www.mozilla.org", "www.openssl.org", "www.rust-lang", "go.dev",
    "www.ecma.ch", "www.iso.org", "www.ieee.org", "www.acm.org", "dl.acm.org",
    "www.usenix.org", "www.springer", "www.elsevier", "www.nature.com", "www.sciencemag",
    "www.youtube.com", "vimeo.com", "www.flickr.com", "medium.com", "dev.to",
]

WORDS = [
    "news", "sport", "world", "article", "articles", "blog", "posts", "post", "wiki",
    "products", "product", "category", "tags", "tag", "users", "user", "profile",
    "search", "help", "about", "contact", "docs", "api", "v1", "v2", "v3", "latest",
    "stable", "release", "download", "files", "media", "images", "img", "static",
    "assets", "css", "js", "fonts", "video", "watch", "live", "archive", "page",
    "issues", "pull", "tree", "master", "main", "src", "lib", "include", "tests",
    "en", "de", "fr", "us", "uk", "index.html", "home", "start", "login", "cart",
    "checkout", "shop", "deals", "reviews", "science", "tech", "politics", "economy",
    "culture", "travel", "weather", "forecast", "sensor", "temp", "rooms", "building",
    "events", "calendar", "people", "team", "research", "papers", "projects",
    "overview", "feed", "rss", "comments", "share", "print", "mobile", "app",
    "library", "reference", "tutorial", "guide", "faq", "terms", "privacy",
]

EXTENSIONS = [".html", ".php", ".pdf", ".jpg", ".png", ".json", ""]


def word(rng):
    return rng.choice(WORDS)


def slug(rng):
    """An article-like segment, e.g. 'solar-storm-hit' or 'a1b2c3'."""
    kind = rng.random()
    if kind < 0.35:
        parts = [word(rng) for _ in range(rng.randint(2, 3))]
        s = "-".join(parts)
    elif kind < 0.6:
        s = "%x" % rng.getrandbits(rng.choice([24, 32, 40]))
    elif kind < 0.8:
        s = str(rng.randint(1, 10 ** rng.randint(1, 8)))
    else:
        s = word(rng) + rng.choice(EXTENSIONS)
    return s[:15]


def segment(rng):
    r = rng.random()
    if r < 0.55:
        return word(rng)
    if r < 0.7:
        return str(rng.randint(1998, 2024))
    return slug(rng)


def path(rng):
    host = rng.choice(HOSTS)
    depth = rng.choices(range(0, 8), weights=[6, 26, 28, 18, 10, 6, 4, 2])[0]
    return "/" + "/".join([host] + [segment(rng) for _ in range(depth)])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=20190922)
    ap.add_argument("--count", type=int, default=10000)
    ap.add_argument("--corpus", default="data/corpus.txt")
    ap.add_argument("--cids", default="data/corpus-cids.conf")
    args = ap.parse_args()

    assert all(len(h) <= 15 for h in HOSTS)
    assert len(HOSTS) <= 128

    rng = random.Random(args.seed)
    with open(args.corpus, "w") as f:
        for _ in range(args.count):
            f.write(path(rng) + "\n")

    with open(args.cids, "w") as f:
        f.write("# One context id per authority of data/corpus.txt.\n")
        f.write("# Generated by tools/gen-corpus.py.\n")
        for i, h in enumerate(HOSTS):
            f.write("cid %d /%s\n" % (i, h))


if __name__ == "__main__":
    main()
