#!/usr/bin/env python3
"""Generate the bundled fixture dumps under data/fixtures/.

posts_300.txt   - synthetic forum dump: 300 valid posts covering all six
                  categories plus irrelevant chatter and excluded posts,
                  with a few malformed records that ingestion must skip.
example_posts.txt - the eight hand-picked example posts used in the docs
                  and unit tests.

Deterministic: fixed seed, no timestamps.
"""

import random

random.seed(1337)

OUT_300 = "data/fixtures/posts_300.txt"
OUT_EXAMPLES = "data/fixtures/example_posts.txt"
OUT_SEP = "data/fixtures/separable_200.txt"


def esc(value):
    return value.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def record(pid, title, body, source="fixture-forum"):
    return f"id={esc(pid)}\tsource={esc(source)}\ttitle={esc(title)}\tbody={esc(body)}"


EXAMPLES = [
    ("ex-binary-rel", "apache issue",
     "... Here is a .php file from an exploit, downloaded from ... Apache APR is "
     "prone to a vulnerability that may allow attackers to cause a denial-of-service "
     "condition ..."),
    ("ex-binary-irr", "nice one",
     "... Good work, its good to learn how to do things yourself. Its a very "
     "rewarding experience ..."),
    ("ex-cat-cred", "combo drop",
     "Leaked data for *** USERNAME / PASSWORD hope0507 : *** jimsam100234:***"),
    ("ex-cat-keylog", "monitoring tool",
     "The Best Keylogger logs all keystrokes, mouse clicks, applications ... sent to "
     "you via mail so you can monitor your computer without being there"),
    ("ex-cat-ddos", "botnet chat",
     "If you're not interested in creating a botnet, with a RAT for example ... Which "
     "use servers to DDoS targets ... Written on mobile-phone, sorry for the formatting"),
    ("ex-cat-sqli", "checker source",
     "Initial checker $newHost = $host.'/interface/ipsconnect.php'; $sql = 'SELECT "
     "COUNT(*) FROM members'; ... $response = SendPost($newHost, $data);"),
    ("ex-cat-crypter", "plasma http",
     "Plasma HTTP BotNet allows you to remotely control computers, known as Clients "
     "... Persistent (Miner is re-injected if terminated) (...truncated)"),
    ("ex-cat-rat", "imminent monitor",
     "Application name: Imminent Monitor Application description: Advanced RAT (The "
     "others cracked/leaked here ... Vendor's URL: "
     "http://www.hackforums.net/showthread.php? / "),
]

# --- synthetic corpus -------------------------------------------------------

FILLER = [
    "thanks for sharing this with the community",
    "let me know if the download link still works",
    "tested on windows and linux builds without problems",
    "reply below if you want an invite to the private channel",
    "the archive is packed with winrar, mirror coming soon",
    "credits go to the original author of the writeup",
    "works fine for me, took about ten minutes to set up",
    "read the full tutorial before asking questions please",
    "this forum keeps getting better every month",
    "bump, still looking for feedback on this release",
]

CATEGORY_TEMPLATES = {
    "cred": [
        ("fresh combo list", "huge dump of username and password pairs, every password checked against the mail provider"),
        ("database share", "selling access to a pass list with username entries, password quality is high"),
        ("account pack", "premium accounts with username plus password combos, password reuse everywhere"),
        ("combo cleaning", "how i dedupe a pass list and verify each username and password pair quickly"),
        ("mail access", "valid password collection sorted by provider, username included for every password line"),
    ],
    "keylog": [
        ("stealth logger", "my keylogger records every keystroke and ships logs by mail, keylogger source included"),
        ("logger help", "the keylogger build crashes on startup, anyone compiled this keylogger with mingw"),
        ("review thread", "comparing keylogger features, this keylogger hides from task manager completely"),
        ("remote logs", "configure the keylogger to upload reports hourly, keylogger ftp panel is simple"),
        ("free release", "releasing my keylogger project, the keylogger grabs clipboard contents too"),
    ],
    "ddos": [
        ("stress test", "launch a ddos from the booter panel, the ddos hits the target server hard"),
        ("amplification", "reflection based ddos tutorial, the attack floods the server with udp traffic"),
        ("takedown help", "need a strong ddos service, the game server keeps mitigating my ddos attempts"),
        ("panel release", "new ddos panel with api, point it at any server and watch the graphs"),
        ("mitigation", "my server survived a ddos of forty gigabit, sharing the ddos filtering rules"),
    ],
    "rat": [
        ("client setup", "the rat builder outputs a clean trojan stub, remote access works over port 81"),
        ("crypted build", "my trojan gets flagged, which rat gives stable remote access these days"),
        ("feature list", "this rat has webcam capture and file manager, classic remote access trojan"),
        ("source drop", "leaked trojan source with full remote access module, compile the rat yourself"),
        ("plugin pack", "plugins for the rat including password recovery, the trojan connects instantly"),
    ],
    "crypter": [
        ("fud results", "the crypter makes any build fud, scantime and runtime crypter with unique stub"),
        ("stub rewrite", "rewrote the crypter stub in assembly, fully fud against thirty five engines"),
        ("miner bundle", "bundle the miner with my crypter, the stub stays fud for weeks"),
        ("crypt service", "i crypt files daily, cheap crypter runs with a private stub per customer"),
        ("detection", "crypter went from fud to flagged overnight, time to refresh the stub"),
    ],
    "sqli": [
        ("dork scanning", "found sql errors on the target, the injection point sits in the id= parameter"),
        ("union based", "sql injection walkthrough, extract tables once the injection returns column counts"),
        ("waf bypass", "bypassing filters on a sql endpoint, the injection payload needs url encoding"),
        ("tool output", "the scanner confirmed sql injection on page.php?id= and dumped the schema"),
        ("manual sqli", "manual sql injection beats automated tools, learn the sql syntax first"),
    ],
}

# every category template needs one relevant keyword so the post labels
# relevant in the binary stage; most carry one naturally (password, keylogger,
# ddos, trojan, crypter) -- sqli templates get one appended below
SQLI_RELEVANT_TAIL = [
    "classic exploit material",
    "the vulnerability is trivial to reproduce",
    "patched builds block the exploit",
    "another vulnerability writeup",
    "the exploit works on old installs",
]

IRRELEVANT = [
    ("introduction", "hello everyone, new member here, glad to join this community at last"),
    ("forum games", "post your favorite movie from last year, mine was the space drama"),
    ("graphics request", "can someone design a signature banner for my profile, blue theme please"),
    ("music thread", "what are you listening to right now, drop your playlist below"),
    ("hardware talk", "upgraded my laptop ram to sixteen gigabytes, huge difference in compile times"),
    ("travel diary", "spent the weekend hiking in the mountains, photos attached in the album"),
    ("cooking corner", "tried a new pasta recipe tonight, the sauce needs more garlic honestly"),
    ("language learning", "practicing spanish every morning, any podcast recommendations for beginners"),
    ("fitness log", "week three of the running plan, finally finished five kilometers without stopping"),
    ("book club", "just finished a long fantasy novel, the ending felt rushed to me"),
    ("site feedback", "the new theme looks great on mobile, dark mode would be nice though"),
    ("pet pictures", "my cat discovered the keyboard drawer and now refuses to leave it"),
]

EXCLUDED = [
    ("scanner question", "is nmap still the best way to map a network quickly"),
    ("course review", "finished an ethical hacking course, the phishing module was the best part"),
    ("tool chat", "wireshark filters every analyst should memorize, sharing my list"),
    ("framework", "metasploit modules for the lab environment, strictly for the pentest course"),
    ("web bugs", "writeup about an xss on a bug bounty target, sanitization was missing"),
    ("wordlists", "where do you download a good wordlist for john the ripper practice"),
]


def weave(body, rng):
    extra = rng.choice(FILLER)
    return body + ". " + extra if rng.random() < 0.7 else body


def main():
    rng = random.Random(20240515)
    lines = []
    n = 0

    def emit(kind, title, body, source="fixture-forum"):
        nonlocal n
        n += 1
        lines.append(record(f"p{n:04d}-{kind}", title, body, source))

    plan = []
    for cat, templates in CATEGORY_TEMPLATES.items():
        for round_ in range(5):  # 5 rounds x 5 templates = 25 posts per category
            for i, (title, body) in enumerate(templates):
                text = body
                if cat == "sqli":
                    text = body + ", " + SQLI_RELEVANT_TAIL[(round_ + i) % 5]
                plan.append((cat, f"{title} #{round_ + 1}", text))
    for round_ in range(10):  # 120 irrelevant
        for title, body in IRRELEVANT:
            plan.append(("irr", f"{title} {round_ + 1}", body))
    for round_ in range(5):  # 30 excluded
        for title, body in EXCLUDED:
            plan.append(("exc", f"{title} {round_ + 1}", body))

    rng.shuffle(plan)
    for kind, title, body in plan:
        body = weave(body, rng)
        if rng.random() < 0.12:  # some html noise ingestion must strip
            body = "<p>" + body + "</p> <br/> &amp; more inside"
        if rng.random() < 0.08:
            title = title.upper()
        emit(kind, title, body)

    # malformed records the parser must skip (bad field, duplicate id, empty)
    lines.append("source=fixture-forum\ttitle=no id field\tbody=this record is broken")
    lines.append(record("p0001-" + plan[0][0].split()[0], "dup", "duplicate id record")
                 .replace("id=p0001-" + plan[0][0].split()[0],
                          "id=" + lines[0].split("\t")[0][3:]))
    lines.append("id=p9999-empty\tsource=fixture-forum\ttitle=\tbody=")

    with open(OUT_300, "w") as f:
        f.write("\n".join(lines) + "\n")

    with open(OUT_EXAMPLES, "w") as f:
        for pid, title, body in EXAMPLES:
            f.write(record(pid, title, body, "examples") + "\n")

    # 200-document corpus with two keyword-disjoint populations: 100 posts
    # built only from security terms, 100 only from neutral terms
    sep_rng = random.Random(8899)
    sec_pool = ["keylogger", "botnet", "malware", "exploit", "trojan", "ransomware",
                "rootkit", "spyware", "backdoor", "ddos", "crypter", "adware"]
    neu_pool = ["garden", "recipe", "holiday", "guitar", "novel", "painting",
                "bicycle", "coffee", "puzzle", "sunset", "museum", "picnic"]
    sep_lines = []
    for i in range(100):
        body = " ".join(sep_rng.choice(sec_pool) for _ in range(sep_rng.randint(6, 12)))
        sep_lines.append(record(f"sec{i:03d}", "", body, "separable"))
    for i in range(100):
        body = " ".join(sep_rng.choice(neu_pool) for _ in range(sep_rng.randint(6, 12)))
        sep_lines.append(record(f"neu{i:03d}", "", body, "separable"))
    with open(OUT_SEP, "w") as f:
        f.write("\n".join(sep_lines) + "\n")

    print(f"wrote {OUT_300} ({n} valid posts + 3 malformed), {OUT_EXAMPLES}, {OUT_SEP}")


if __name__ == "__main__":
    main()
