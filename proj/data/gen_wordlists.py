#!/usr/bin/env python3
"""Regenerates stopwords.txt, lemma_exceptions.tsv and src/text_data.cpp.

The embedded copies in text_data.cpp must stay identical to the shipped data
files; edit the lists here and rerun."""

import os

STOPWORDS = """
a about above across after afterwards again against all almost alone along
already also although always am among amongst amount an and another any anyhow
anyone anything anyway anywhere are around as at back be became because become
becomes becoming been before beforehand behind being below beside besides
between beyond bill both bottom but by call can cannot cant co con could
couldnt cry de amoungst system fify
describe detail do done down due during each eg eight either eleven else
elsewhere empty enough etc even ever every everyone everything everywhere
except few fifteen fifty fill find fire first five for former formerly forty
found four from front full further get give go had has hasnt have he hence her
here hereafter hereby herein hereupon hers herself him himself his how however
hundred ie if in inc indeed interest into is it its itself keep last latter
latterly least less ltd made many may me meanwhile might mill mine more
moreover most mostly move much must my myself name namely neither never
nevertheless next nine no nobody none noone nor not nothing now nowhere of off
often on once one only onto or other others otherwise our ours ourselves out
over own part per perhaps please put rather re same see seem seemed seeming
seems serious several she should show side since sincere six sixty so some
somehow someone something sometime sometimes somewhere still such take ten
than that the their them themselves then thence there thereafter thereby
therefore therein thereupon these they thick thin third this those though
three through throughout thru thus to together too top toward towards twelve
twenty two un under until up upon us very via was we well were what whatever
when whence whenever where whereafter whereas whereby wherein whereupon
wherever whether which while whither who whoever whole whom whose why will
with within without would yet you your yours yourself yourselves
""".split()

# irregular form -> lemma; values must be fixed points of the lemmatizer
LEMMA_EXCEPTIONS = {
    # irregular verb past/participle forms
    "ate": "eat", "beat": "beat", "became": "become", "began": "begin",
    "begun": "begin", "bent": "bend", "bet": "bet", "bit": "bite",
    "bitten": "bite", "bled": "bleed", "blew": "blow", "blown": "blow",
    "bought": "buy", "bred": "breed", "broke": "break", "broken": "break",
    "brought": "bring", "built": "build", "burnt": "burn", "burst": "burst",
    "came": "come", "caught": "catch", "chose": "choose", "chosen": "choose",
    "crept": "creep", "cut": "cut", "dealt": "deal", "did": "do",
    "does": "do", "drank": "drink", "drawn": "draw", "drew": "draw",
    "driven": "drive", "drove": "drive", "drunk": "drink", "dug": "dig",
    "eaten": "eat", "fallen": "fall", "fed": "feed", "fell": "fall",
    "felt": "feel", "fled": "flee", "flew": "fly", "flown": "fly",
    "forgave": "forgive", "forgiven": "forgive", "forgot": "forget",
    "forgotten": "forget", "fought": "fight", "froze": "freeze",
    "frozen": "freeze", "gave": "give", "given": "give", "gone": "go",
    "got": "get", "gotten": "get", "grew": "grow", "ground": "grind",
    "grown": "grow", "having": "have", "heard": "hear", "held": "hold",
    "hid": "hide", "hidden": "hide", "hit": "hit", "hung": "hang",
    "kept": "keep", "knew": "know", "known": "know", "laid": "lay",
    "lain": "lie", "leapt": "leap", "learnt": "learn", "led": "lead",
    "left": "leave", "lent": "lend", "let": "let", "lit": "light",
    "lost": "lose", "meant": "mean", "met": "meet", "mistaken": "mistake",
    "mistook": "mistake", "paid": "pay", "quit": "quit", "rang": "ring",
    "ran": "run", "ridden": "ride", "risen": "rise", "rode": "ride",
    "rose": "rise", "rung": "ring", "said": "say", "sang": "sing",
    "sank": "sink", "sat": "sit", "saw": "see", "seen": "see",
    "sent": "send", "shaken": "shake", "shed": "shed", "shone": "shine",
    "shook": "shake", "shot": "shoot", "shrank": "shrink", "shut": "shut",
    "slept": "sleep", "slid": "slide", "smelt": "smell", "sold": "sell",
    "sought": "seek", "spat": "spit", "sped": "speed", "spent": "spend",
    "spilt": "spill", "spoke": "speak", "spoken": "speak", "sprang": "spring",
    "spread": "spread", "sprung": "spring", "spun": "spin", "stank": "stink",
    "stole": "steal", "stolen": "steal", "stood": "stand", "strode": "stride",
    "strove": "strive", "struck": "strike", "stuck": "stick",
    "stung": "sting", "sung": "sing", "sunk": "sink", "swam": "swim",
    "swept": "sweep", "swore": "swear", "sworn": "swear", "swum": "swim",
    "taken": "take", "taught": "teach", "threw": "throw", "thrown": "throw",
    "thought": "think", "told": "tell", "took": "take", "tore": "tear",
    "torn": "tear", "trod": "tread", "understood": "understand",
    "undid": "undo", "undone": "undo", "upheld": "uphold", "upset": "upset",
    "used": "use", "using": "use", "went": "go", "wept": "weep",
    "withdrawn": "withdraw", "withdrew": "withdraw", "woke": "wake",
    "woken": "wake", "won": "win", "wore": "wear", "worn": "wear",
    "wound": "wind", "wove": "weave", "woven": "weave", "wrote": "write",
    "written": "write", "wrung": "wring",
    # irregular noun plurals
    "analyses": "analysis", "appendices": "appendix", "children": "child",
    "crises": "crisis", "criteria": "criterion", "feet": "foot",
    "geese": "goose", "hypotheses": "hypothesis", "indices": "index",
    "lice": "louse", "matrices": "matrix", "men": "man", "mice": "mouse",
    "oxen": "ox", "phenomena": "phenomenon", "teeth": "tooth",
    "theses": "thesis", "vertices": "vertex", "women": "woman",
    # forms the suffix rules would mangle
    "cookies": "cookie", "movies": "movie", "ddos": "ddos", "news": "news",
    "series": "series", "species": "species", "statuses": "status",
    "viruses": "virus", "axes": "axis", "bases": "base", "cases": "case",
    "causes": "cause", "databases": "database", "houses": "house",
    "licenses": "license", "phases": "phase", "phrases": "phrase",
    "purposes": "purpose", "releases": "release", "responses": "response",
    "uses": "use", "abuses": "abuse", "browses": "browse",
    "classes": "class", "clothes": "clothes", "courses": "course",
    "devices": "device", "services": "service", "sources": "source",
    "chances": "chance", "choices": "choice", "instances": "instance",
    "interfaces": "interface", "licences": "licence", "notices": "notice",
    "offences": "offence", "pieces": "piece", "places": "place",
    "prices": "price", "resources": "resource", "sentences": "sentence",
    "spaces": "space", "surfaces": "surface", "voices": "voice",
}


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    root = os.path.dirname(here)

    stop_lines = ["# English stopword list used by the preprocessing pipeline."]
    stop_lines += sorted(STOPWORDS)
    stop_text = "\n".join(stop_lines) + "\n"
    with open(os.path.join(here, "stopwords.txt"), "w") as f:
        f.write(stop_text)

    lemma_lines = ["# irregular form<TAB>lemma"]
    lemma_lines += [f"{k}\t{v}" for k, v in sorted(LEMMA_EXCEPTIONS.items())]
    lemma_text = "\n".join(lemma_lines) + "\n"
    with open(os.path.join(here, "lemma_exceptions.tsv"), "w") as f:
        f.write(lemma_text)

    cpp = (
        "// Generated by data/gen_wordlists.py; do not edit by hand.\n"
        "namespace cti::detail {\n\n"
        'const char* kBuiltinStopwords =\nR"stop(' + stop_text + ')stop";\n\n'
        'const char* kBuiltinLemmaExceptions =\nR"lem(' + lemma_text + ')lem";\n\n'
        "}  // namespace cti::detail\n"
    )
    with open(os.path.join(root, "src", "text_data.cpp"), "w") as f:
        f.write(cpp)
    print(f"{len(set(STOPWORDS))} stopwords, {len(LEMMA_EXCEPTIONS)} lemma exceptions")


if __name__ == "__main__":
    main()
