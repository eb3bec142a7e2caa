#!/usr/bin/env python3
"""Regenerates the bundled fixture corpora under data/fixtures/.

Deterministic: running it twice produces byte-identical files. The corpus
statistics are tuned so the documented chunking, ranking, and clustering
behaviors hold; regenerate only together with the test expectations.
"""

import json
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "data", "fixtures")


# ---------------------------------------------------------------------------
# CoNLL-U helpers

def row(idx, form, lemma, upos, head, deprel):
    return f"{idx}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_"


def sent(text, rows):
    lines = [f"# text = {text}"]
    lines.extend(rows)
    lines.append("")
    return "\n".join(lines)


def svo(subj_words, verb, verb_lemma, obj_words, pps=(), period=True):
    """Builds a subject-verb-object sentence with optional obl PPs.

    subj_words/obj_words: list of (form, lemma, upos); the phrase head is the
    last word. pps: list of (prep, [(form, lemma, upos), ...]).
    """
    rows = []
    idx = 0
    subj_head = len(subj_words)
    verb_idx = len(subj_words) + 1
    for i, (form, lemma, upos) in enumerate(subj_words):
        idx += 1
        head = subj_head if i + 1 < len(subj_words) else verb_idx
        rel = "det" if upos == "DET" else ("amod" if upos == "ADJ" else "compound")
        if i + 1 == len(subj_words):
            rel = "nsubj"
        rows.append(row(idx, form, lemma, upos, head, rel))
    idx += 1
    rows.append(row(idx, verb, verb_lemma, "VERB", 0, "root"))
    obj_head = idx + len(obj_words)
    for i, (form, lemma, upos) in enumerate(obj_words):
        idx += 1
        head = obj_head if i + 1 < len(obj_words) else verb_idx
        rel = "det" if upos == "DET" else ("amod" if upos == "ADJ" else "compound")
        if i + 1 == len(obj_words):
            rel = "obj"
        rows.append(row(idx, form, lemma, upos, head, rel))
    for prep, words in pps:
        prep_idx = idx + 1
        pp_head = prep_idx + len(words)
        rows.append(row(prep_idx, prep, prep, "ADP", pp_head, "case"))
        idx = prep_idx
        for i, (form, lemma, upos) in enumerate(words):
            idx += 1
            head = pp_head if i + 1 < len(words) else verb_idx
            rel = "det" if upos == "DET" else ("amod" if upos == "ADJ" else "compound")
            if i + 1 == len(words):
                rel = "obl"
            rows.append(row(idx, form, lemma, upos, head, rel))
    if period:
        idx += 1
        rows.append(row(idx, ".", ".", "PUNCT", verb_idx, "punct"))
    forms = [w[0] for w in subj_words] + [verb] + [w[0] for w in obj_words]
    for prep, words in pps:
        forms.append(prep)
        forms.extend(w[0] for w in words)
    text = " ".join(forms) + (" ." if period else "")
    return sent(text, rows)


def W(*triples):
    return list(triples)


DET_The = ("The", "the", "DET")
DET_the = ("the", "the", "DET")
DET_A = ("A", "a", "DET")
DET_a = ("a", "a", "DET")


def noun(form, lemma=None):
    return (form, lemma or form.lower(), "NOUN")


def pnoun(form, lemma=None):
    return (form, lemma or form, "PROPN")


def adj(form, lemma=None):
    return (form, lemma or form.lower(), "ADJ")


# ---------------------------------------------------------------------------
# Domain CoNLL-U documents (the frame source)

def pha_overview():
    rows = [
        row(1, "The", "the", "DET", 2, "det"),
        row(2, "team", "team", "NOUN", 3, "nsubj"),
        row(3, "identified", "identify", "VERB", 0, "root"),
        row(4, "several", "several", "ADJ", 6, "amod"),
        row(5, "hazardous", "hazardous", "ADJ", 6, "amod"),
        row(6, "chemicals", "chemical", "NOUN", 3, "obj"),
        row(7, "in", "in", "ADP", 10, "case"),
        row(8, "the", "the", "DET", 10, "det"),
        row(9, "new", "new", "ADJ", 10, "amod"),
        row(10, "process", "process", "NOUN", 3, "obl"),
        row(11, "through", "through", "ADP", 14, "case"),
        row(12, "Process", "Process", "PROPN", 14, "compound"),
        row(13, "Hazards", "Hazards", "PROPN", 14, "compound"),
        row(14, "Analysis", "Analysis", "PROPN", 3, "obl"),
        row(15, "(", "(", "PUNCT", 16, "punct"),
        row(16, "PHA", "PHA", "PROPN", 14, "appos"),
        row(17, ")", ")", "PUNCT", 16, "punct"),
        row(18, ".", ".", "PUNCT", 3, "punct"),
    ]
    text = ("The team identified several hazardous chemicals in the new "
            "process through Process Hazards Analysis (PHA).")
    return sent(text, rows)


def hazop_sentence(verb, verb_lemma, obj_words):
    # "The hazard and operability study <verb> <obj> ." with the first
    # conjunct heading the coordination, UD style
    rows = [
        row(1, "The", "the", "DET", 2, "det"),
        row(2, "hazard", "hazard", "NOUN", 6, "nsubj"),
        row(3, "and", "and", "CCONJ", 5, "cc"),
        row(4, "operability", "operability", "NOUN", 5, "compound"),
        row(5, "study", "study", "NOUN", 2, "conj"),
        row(6, verb, verb_lemma, "VERB", 0, "root"),
    ]
    idx = 6
    obj_head = idx + len(obj_words)
    for i, (form, lemma, upos) in enumerate(obj_words):
        idx += 1
        head = obj_head if i + 1 < len(obj_words) else 6
        rel = "det" if upos == "DET" else ("amod" if upos == "ADJ" else "compound")
        if i + 1 == len(obj_words):
            rel = "obj"
        rows.append(row(idx, form, lemma, upos, head, rel))
    idx += 1
    rows.append(row(idx, ".", ".", "PUNCT", 6, "punct"))
    forms = ["The", "hazard", "and", "operability", "study", verb]
    forms += [w[0] for w in obj_words] + ["."]
    return sent(" ".join(forms[:-1]) + " .", rows)


def hazop_overview():
    parts = [
        hazop_sentence("examines", "examine", W(DET_the, adj("new"), noun("process"))),
        svo(W(DET_The, noun("team")), "weighed", "weigh",
            W(DET_the, noun("hazard", "hazard"))),
        hazop_sentence("supports", "support",
                       W(noun("incident"), noun("investigation"))),
    ]
    # append "and risk" coordination to the second sentence by hand
    weighed = [
        row(1, "The", "the", "DET", 2, "det"),
        row(2, "team", "team", "NOUN", 3, "nsubj"),
        row(3, "weighed", "weigh", "VERB", 0, "root"),
        row(4, "the", "the", "DET", 5, "det"),
        row(5, "hazard", "hazard", "NOUN", 3, "obj"),
        row(6, "and", "and", "CCONJ", 7, "cc"),
        row(7, "risk", "risk", "NOUN", 5, "conj"),
        row(8, ".", ".", "PUNCT", 3, "punct"),
    ]
    parts[1] = sent("The team weighed the hazard and risk .", weighed)
    return "\n".join(parts)


def copula(subj_words, pred_words):
    rows = []
    idx = 0
    subj_head = len(subj_words)
    cop_idx = len(subj_words) + 1
    pred_head = cop_idx + len(pred_words)
    for i, (form, lemma, upos) in enumerate(subj_words):
        idx += 1
        head = subj_head if i + 1 < len(subj_words) else pred_head
        rel = "det" if upos == "DET" else ("amod" if upos == "ADJ" else "compound")
        if i + 1 == len(subj_words):
            rel = "nsubj"
        rows.append(row(idx, form, lemma, upos, head, rel))
    idx += 1
    rows.append(row(idx, "is", "be", "AUX", pred_head, "cop"))
    for i, (form, lemma, upos) in enumerate(pred_words):
        idx += 1
        head = pred_head if i + 1 < len(pred_words) else 0
        rel = "det" if upos == "DET" else ("amod" if upos == "ADJ" else "compound")
        if i + 1 == len(pred_words):
            rel = "root"
        rows.append(row(idx, form, lemma, upos, head, rel))
    idx += 1
    rows.append(row(idx, ".", ".", "PUNCT", pred_head, "punct"))
    forms = [w[0] for w in subj_words] + ["is"] + [w[0] for w in pred_words]
    return sent(" ".join(forms) + " .", rows)


def nmod_sentence(subj_words, verb, verb_lemma, obj_words, prep, nmod_words):
    """S V O prep NP, with the PP attached to the object noun."""
    rows = []
    idx = 0
    subj_head = len(subj_words)
    verb_idx = len(subj_words) + 1
    for i, (form, lemma, upos) in enumerate(subj_words):
        idx += 1
        head = subj_head if i + 1 < len(subj_words) else verb_idx
        rel = "det" if upos == "DET" else ("amod" if upos == "ADJ" else "compound")
        if i + 1 == len(subj_words):
            rel = "nsubj"
        rows.append(row(idx, form, lemma, upos, head, rel))
    idx += 1
    rows.append(row(idx, verb, verb_lemma, "VERB", 0, "root"))
    obj_head = idx + len(obj_words)
    for i, (form, lemma, upos) in enumerate(obj_words):
        idx += 1
        head = obj_head if i + 1 < len(obj_words) else verb_idx
        rel = "det" if upos == "DET" else ("amod" if upos == "ADJ" else "compound")
        if i + 1 == len(obj_words):
            rel = "obj"
        rows.append(row(idx, form, lemma, upos, head, rel))
    prep_idx = idx + 1
    nmod_head = prep_idx + len(nmod_words)
    rows.append(row(prep_idx, prep, prep, "ADP", nmod_head, "case"))
    idx = prep_idx
    for i, (form, lemma, upos) in enumerate(nmod_words):
        idx += 1
        head = nmod_head if i + 1 < len(nmod_words) else obj_head
        rel = "det" if upos == "DET" else ("amod" if upos == "ADJ" else "compound")
        if i + 1 == len(nmod_words):
            rel = "nmod"
        rows.append(row(idx, form, lemma, upos, head, rel))
    idx += 1
    rows.append(row(idx, ".", ".", "PUNCT", verb_idx, "punct"))
    forms = [w[0] for w in subj_words] + [verb] + [w[0] for w in obj_words]
    forms += [prep] + [w[0] for w in nmod_words]
    return sent(" ".join(forms) + " .", rows)


def domain_conllu_docs():
    docs = {}
    docs["pha_overview"] = pha_overview()
    docs["hazop_overview"] = hazop_overview()

    docs["methods_1"] = "\n".join([
        copula(W(pnoun("Fault"), pnoun("Tree"), pnoun("Analysis", "analysis")),
               W(DET_a, adj("deductive"), noun("technique"))),
        svo(W(DET_The, noun("engineer")), "applied", "apply",
            W(noun("fault"), noun("tree"), noun("analysis")),
            pps=[("in", W(DET_the, noun("incident"), noun("investigation")))]),
        svo(W(pnoun("Event", "event"), noun("tree"), noun("analysis")),
            "quantifies", "quantify", W(DET_the, noun("consequences", "consequence"))),
    ])

    docs["methods_2"] = "\n".join([
        nmod_sentence(W(DET_The, noun("team")), "performed", "perform",
                      W(DET_the, noun("risk"), noun("assessment")),
                      "of", W(DET_the, noun("storage"), noun("tank"))),
        svo(W(DET_The, noun("operator")), "inspected", "inspect",
            W(DET_the, noun("pressure"), noun("relief"), noun("valve"))),
        svo(W(pnoun("Process", "process"), pnoun("Hazards", "hazards"),
              pnoun("Analysis", "analysis")),
            "addresses", "address",
            W(adj("several"), adj("hazardous"), noun("chemicals", "chemical"))),
    ])

    docs["management"] = "\n".join([
        svo(W(DET_The, noun("safety"), noun("report")), "documents", "document",
            W(DET_the, noun("risk"), noun("assessment"))),
        svo(W(DET_The, noun("safety"), noun("management"), noun("system")),
            "covers", "cover", W(noun("fire"), noun("protection"))),
        svo(W(pnoun("Risk", "risk"), noun("management")), "requires", "require",
            W(DET_a, noun("safety"), noun("report"))),
        svo(W(pnoun("Risk", "risk"), noun("management")), "mitigates", "mitigate",
            W(DET_the, noun("risk"))),
        svo(W(DET_The, noun("risk")), "justifies", "justify",
            W(DET_the, noun("risk"), noun("assessment"))),
    ])

    docs["equipment"] = "\n".join([
        svo(W(DET_The, noun("chemical"), noun("reactor")), "contains", "contain",
            W(adj("several"), adj("hazardous"), noun("chemicals", "chemical"))),
        svo(W(DET_The, noun("storage"), noun("tank")), "feeds", "feed",
            W(DET_the, noun("chemical"), noun("reactor"))),
        svo(W(DET_The, noun("pressure"), noun("relief"), noun("valve")),
            "protects", "protect", W(DET_the, noun("storage"), noun("tank"))),
    ])

    docs["humans"] = "\n".join([
        svo(W(pnoun("Human", "human"), noun("error")), "causes", "cause",
            W(DET_the, noun("incident"))),
        svo(W(DET_The, noun("incident"), noun("investigation")),
            "examines", "examine", W(noun("human"), noun("error"))),
        svo(W(DET_The, noun("checklist")), "reduces", "reduce",
            W(noun("human"), noun("error"))),
    ])

    docs["checklists"] = "\n".join([
        svo(W(DET_The, noun("checklist")), "covers", "cover",
            W(noun("fire"), noun("protection"))),
        svo(W(DET_The, noun("engineer")), "reviews", "review",
            W(DET_the, noun("checklist")),
            pps=[("during", W(DET_the, noun("incident"), noun("investigation")))]),
        copula(W(pnoun("Fire", "fire"), noun("protection")),
               W(DET_a, noun("priority"))),
    ])

    docs["general_1"] = "\n".join([
        svo(W(DET_The, noun("team")), "met", "meet", W(noun("people"), ),
            pps=[("during", W(DET_the, noun("year")))]),
        svo(W(DET_The, noun("operator")), "wrote", "write",
            W(DET_the, noun("report"))),
        svo(W(DET_The, noun("company")), "trains", "train", W(DET_the, noun("team"))),
    ])

    docs["plant_1"] = "\n".join([
        svo(W(DET_The, noun("plant")), "operates", "operate",
            W(DET_the, adj("new"), noun("process"))),
        svo(W(DET_The, noun("engineer")), "monitors", "monitor",
            W(DET_the, noun("plant"))),
        svo(W(DET_The, noun("procedure")), "guides", "guide",
            W(DET_the, noun("operator"))),
    ])

    docs["process_safety"] = "\n".join([
        svo(W(DET_The, noun("alarm"), noun("system")), "alerts", "alert",
            W(DET_the, noun("operator"))),
        svo(W(DET_The, noun("emergency"), noun("plan")), "defines", "define",
            W(DET_the, noun("evacuation"), noun("procedure"))),
        svo(W(DET_The, noun("training"), noun("program")), "covers", "cover",
            W(DET_the, noun("emergency"), noun("plan"))),
    ])

    docs["extra_methods"] = "\n".join([
        svo(W(DET_The, adj("what-if"), noun("analysis")), "explores", "explore",
            W(DET_the, noun("deviation"))),
        svo(W(DET_The, noun("team")), "documented", "document",
            W(DET_the, adj("near"), noun("miss")),
            pps=[("in", W(DET_the, noun("safety"), noun("report")))]),
        svo(W(DET_The, noun("audit")), "verifies", "verify",
            W(DET_the, noun("procedure"))),
    ])

    docs["misc_1"] = "\n".join([
        svo(W(DET_The, noun("pump")), "transfers", "transfer",
            W(DET_the, adj("hazardous"), noun("chemicals", "chemical"))),
        svo(W(DET_The, noun("pipeline")), "connects", "connect",
            W(DET_the, noun("storage"), noun("tank"))),
        svo(W(DET_The, noun("boiler")), "heats", "heat", W(DET_the, noun("water"))),
    ])

    docs["misc_2"] = "\n".join([
        svo(W(DET_The, noun("sensor")), "detects", "detect", W(DET_the, noun("leak"))),
        svo(W(DET_The, noun("leak")), "threatens", "threaten",
            W(DET_the, noun("plant"))),
        svo(W(DET_The, noun("supervisor")), "approves", "approve",
            W(DET_the, noun("procedure"))),
    ])

    docs["misc_3"] = "\n".join([
        svo(W(DET_The, noun("team")), "performed", "perform",
            W(pnoun("Process", "process"), pnoun("Hazards", "hazards"),
              pnoun("Analysis", "analysis"))),
        svo(W(DET_The, noun("engineer")), "scheduled", "schedule",
            W(DET_the, noun("risk"), noun("assessment"))),
        svo(W(DET_The, noun("operator")), "follows", "follow",
            W(DET_the, noun("checklist"))),
    ])
    return docs


# ---------------------------------------------------------------------------
# Domain plain-text documents

def domain_sentence_pool():
    # (sentence, count) — counts tune phrase and word frequencies
    return [
        ("The hazard and operability study guides the review team.", 9),
        ("Engineers value the hazard and operability study for complex units.", 9),
        ("Every hazard and operability study records the findings in a report.", 8),
        ("The team completed a process hazards analysis for the unit.", 7),
        ("A thorough process hazards analysis lists every credible scenario.", 7),
        ("The process hazards analysis covers the whole unit.", 6),
        ("The process runs around the clock.", 8),
        ("Operators adjust the process at night.", 6),
        ("The process stays within its limits.", 6),
        ("The analysis confirmed the finding.", 6),
        ("Fault tree analysis traces the failure to its root causes.", 6),
        ("The engineer prepared a fault tree analysis of the shutdown.", 6),
        ("Fault tree analysis complements event tree analysis in most studies.", 6),
        ("Event tree analysis follows the accident sequence forward.", 5),
        ("The risk assessment ranks each hazard by severity.", 8),
        ("A risk assessment precedes every change to the plant.", 7),
        ("The annual risk assessment updates the register.", 7),
        ("Risk management allocates resources to the worst hazards.", 6),
        ("Good risk management keeps the plant within its safe envelope.", 6),
        ("Risk management reviews the findings every quarter.", 6),
        ("The safety report summarizes the risk assessment for the regulator.", 7),
        ("Operators file a safety report after every incident.", 6),
        ("The new process starts up next month.", 6),
        ("The new process replaces the old batch line.", 5),
        ("Commissioning of the new process begins after the review.", 5),
        ("The chemical reactor runs at high pressure.", 6),
        ("Cooling protects the chemical reactor from runaway.", 6),
        ("The storage tank holds flammable solvent.", 6),
        ("Operators drain the storage tank before maintenance.", 6),
        ("The pressure relief valve opens at the set point.", 5),
        ("A blocked pressure relief valve is a serious hazard.", 5),
        ("Human error contributes to most recorded incidents.", 6),
        ("Training reduces human error during startup.", 6),
        ("The incident investigation found a latent hazard.", 6),
        ("Every incident investigation produces a safety report.", 5),
        ("Fire protection systems surround the tank farm.", 6),
        ("The plant upgraded its fire protection last year.", 5),
        ("The safety management system assigns clear responsibilities.", 5),
        ("Auditors examined the safety management system in depth.", 5),
        ("The checklist prompts the operator at each step.", 8),
        ("A short checklist prevents routine slips.", 7),
        ("The hazard register tracks each open hazard.", 7),
        ("Operators report any new hazard to the supervisor.", 7),
        ("Each hazard receives a severity rating.", 7),
        ("The residual risk remains after the safeguards.", 7),
        ("The risk falls when safeguards are added.", 7),
        ("A tolerable risk still needs monitoring.", 6),
        ("The team walks the unit every morning.", 5),
        ("The team briefs the operators before the shift.", 5),
        ("People trust the team during an upset.", 4),
        ("The operators trust the procedure during the year.", 4),
        ("The engineer checked the alarm system and the emergency plan.", 4),
        ("The evacuation procedure names the muster points.", 4),
        ("The training program refreshes the emergency plan each year.", 4),
        ("The what-if analysis asks how the deviation could occur.", 4),
        ("A near miss teaches the same lesson at lower cost.", 4),
        ("The audit confirmed the procedure matches practice.", 4),
        ("The pump moves solvent through the pipeline.", 4),
        ("The boiler supplies steam to the plant.", 3),
        ("The sensor flags a leak within seconds.", 3),
        ("The supervisor signs the report after the study.", 3),
        ("Several hazardous chemicals require special storage.", 4),
        ("The consequences of a leak reach beyond the fence.", 3),
        ("Water curtains limit the consequences of a release.", 2),
        ("The deviation appeared during the night shift.", 2),
        ("The study covered the whole unit.", 2),
        ("The deductive technique suits rare failures.", 2),
        ("The priority is clear to everyone.", 2),
    ]


def contrastive_sentence_pool():
    return [
        ("The team won the game in the final minute.", 30),
        ("The home team lost despite the crowd.", 25),
        ("People filled the city square before the parade.", 25),
        ("Most people stayed home during the storm.", 22),
        ("The company reported strong results for the year.", 25),
        ("The company opened a new store downtown.", 20),
        ("The market closed higher for the third day.", 22),
        ("Investors watched the market with unease.", 18),
        ("The report surprised the analysts.", 16),
        ("The annual report arrived late this year.", 14),
        ("The band played music late into the night.", 14),
        ("The festival brought music to the city.", 12),
        ("The school opened a new library this year.", 13),
        ("Students from the school visited the museum.", 10),
        ("The mayor of the city promised new parks.", 12),
        ("The government announced a budget for the year.", 12),
        ("The film drew people to the old theatre.", 10),
        ("The writer finished the book after a decade.", 10),
        ("The chef changed the menu for the season.", 9),
        ("The team signed a young striker.", 12),
        ("The game ended without a goal.", 10),
        ("The year began with heavy snow.", 10),
        ("The company changed its hiring process.", 7),
        ("The new process shortened the queue at the counter.", 3),
        ("Investors avoid risk when rates rise.", 5),
        ("The study surveyed a thousand readers.", 5),
        ("The bank published a market analysis.", 4),
        ("Critics praised the album as a quiet triumph.", 8),
        ("The train to the coast runs every hour.", 8),
        ("Tourists photographed the bridge at dawn.", 8),
        ("The museum extended its evening hours.", 7),
        ("The garden show returns next spring.", 7),
        ("Voters filled the hall for the debate.", 7),
        ("The airline added a route to the islands.", 7),
        ("The bakery on the corner sells out by noon.", 6),
        ("The league fined the club for the delay.", 6),
        ("The mayor opened the new bridge.", 6),
        ("A storm closed the harbour for a day.", 6),
        ("The theatre staged a classic this season.", 6),
        ("The race drew runners from every town.", 5),
    ]


def pack_documents(pool, docs_count, rng):
    """Expands (sentence, count) into a stream and packs it into documents."""
    stream = []
    for sentence, count in pool:
        stream.extend([sentence] * count)
    rng.shuffle(stream)
    docs = [[] for _ in range(docs_count)]
    for i, sentence in enumerate(stream):
        docs[i % docs_count].append(sentence)
    return [" ".join(doc) for doc in docs if doc]


# ---------------------------------------------------------------------------
# Snapshot and benchmark

SNAPSHOT_GROUPS = [
    # analysis methods
    ["hazard and operability study", "process hazards analysis",
     "fault tree analysis", "event tree analysis", "what-if analysis"],
    # risk and safety management
    ["risk assessment", "risk management", "safety report",
     "safety management system", "audit"],
    # process equipment
    ["chemical reactor", "storage tank", "pressure relief valve",
     "new process", "pipeline", "pump", "boiler"],
    # people and prevention
    ["human error", "incident investigation", "fire protection", "checklist",
     "training program", "emergency plan", "evacuation procedure"],
    # general operations vocabulary
    ["team", "people", "report", "year", "company", "hazard", "risk",
     "plant", "operator", "engineer", "procedure", "supervisor", "incident",
     "consequence", "deviation", "leak", "water", "sensor", "alarm system",
     "near miss", "priority", "deductive technique", "several hazardous chemical",
     "hazardous chemical", "miss", "study"],
]

WITHIN_PAIR = 450
JUNK_PAIR = 200
UNIGRAM = 1000
UNIVERSE = 1000000

# distinct cross-group pair counts keep cross distances unequal, so the
# clustering's farthest-pair seeding and nearest-seed assignment stay
# unambiguous and groups move between children as a whole
CROSS_PAIRS = [4, 5, 6, 7, 8]


def make_snapshot():
    unigram = {}
    pairs = {}
    for group in SNAPSHOT_GROUPS:
        for term in group:
            unigram[term] = UNIGRAM
    all_terms = sorted(unigram)
    cross_idx = 0
    cross_count = {}
    for i, a in enumerate(all_terms):
        for b in all_terms[i + 1:]:
            ga = next(k for k, g in enumerate(SNAPSHOT_GROUPS) if a in g)
            gb = next(k for k, g in enumerate(SNAPSHOT_GROUPS) if b in g)
            if ga == gb:
                count = JUNK_PAIR if ga == len(SNAPSHOT_GROUPS) - 1 else WITHIN_PAIR
            else:
                gkey = (min(ga, gb), max(ga, gb))
                if gkey not in cross_count:
                    cross_count[gkey] = CROSS_PAIRS[cross_idx % len(CROSS_PAIRS)]
                    cross_idx += 1
                count = cross_count[gkey]
            key = f"{min(a, b)}||{max(a, b)}"
            pairs[key] = count
    return {"N": UNIVERSE, "unigram": unigram, "pair": pairs}


def make_fixture_benchmark():
    concepts = [
        {"id": "fb1", "label": "hazard and operability study",
         "synonyms": ["hazop"],
         "seed_terms": ["hazard and operability study", "process hazards analysis"]},
        {"id": "fb2", "label": "fault tree analysis",
         "seed_terms": ["fault tree analysis", "event tree analysis"]},
        {"id": "fb3", "label": "risk assessment",
         "seed_terms": ["risk assessment", "risk management"]},
        {"id": "fb4", "label": "safety management",
         "seed_terms": ["safety management system", "safety report"]},
        {"id": "fb5", "label": "process equipment",
         "seed_terms": ["chemical reactor", "storage tank", "pressure relief valve"]},
        {"id": "fb6", "label": "human factors",
         "seed_terms": ["human error", "incident investigation"]},
        {"id": "fb7", "label": "fire protection",
         "seed_terms": ["fire protection"]},
        {"id": "fb8", "label": "checklists", "synonyms": ["checklist"],
         "seed_terms": ["checklist"]},
        {"id": "fb9", "label": "sneak analysis",
         "seed_terms": ["sneak analysis"]},
        {"id": "fb10", "label": "task analysis",
         "seed_terms": ["task analysis"]},
    ]
    excluded = [
        {"id": "fbx1", "reason": "no supporting terms in the fixture corpus"},
    ]
    return {"concepts": concepts, "excluded": excluded}


# ---------------------------------------------------------------------------

def write(path, content):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)


def main():
    rng = random.Random(20240)

    # domain conllu
    for name, content in sorted(domain_conllu_docs().items()):
        write(os.path.join(FIXTURES, "domain", name + ".conllu"), content + "\n")

    # domain txt
    domain_docs = pack_documents(domain_sentence_pool(), 44, rng)
    for i, text in enumerate(domain_docs):
        write(os.path.join(FIXTURES, "domain", f"d{i:02d}.txt"), text + "\n")

    # the noisy document for the cleaning golden case
    noisy = ("Most operators trust teh team during the incident investigation. "
             "The team briefs the operators before the shift.")
    write(os.path.join(FIXTURES, "domain", "noisy_report.txt"), noisy + "\n")

    # contrastive txt
    contrastive_docs = pack_documents(contrastive_sentence_pool(), 205, rng)
    for i, text in enumerate(contrastive_docs):
        write(os.path.join(FIXTURES, "contrastive", f"c{i:03d}.txt"), text + "\n")

    # abbreviation dictionary
    write(os.path.join(FIXTURES, "abbrev.tsv"),
          "# abbreviation<TAB>expansion<TAB>weight\n"
          "pha\tprocess hazards analysis\t0.9\n"
          "hazop\thazard and operability study\t0.9\n"
          "fta\tfault tree analysis\t0.8\n")

    # hit-count snapshot
    write(os.path.join(FIXTURES, "snapshot.json"),
          json.dumps(make_snapshot(), indent=2, sort_keys=True) + "\n")

    # benchmark
    write(os.path.join(FIXTURES, "benchmark.json"),
          json.dumps(make_fixture_benchmark(), indent=2) + "\n")

    # pipeline config
    config = {
        "domain_dir": "domain",
        "contrastive_dir": "contrastive",
        "abbrev_path": "abbrev.tsv",
        "snapshot_path": "snapshot.json",
        "benchmark_path": "benchmark.json",
        "window": 5,
        "top_n": 36,
        "measure": "th",
        "cluster": {"max_leaf": 4, "theta_split": 0.35, "theta_out": 0.75,
                    "passes": 3},
        "cleaning": {"enabled": False},
        "seed": 7,
        "out_dir": "out",
    }
    write(os.path.join(FIXTURES, "config.json"),
          json.dumps(config, indent=2) + "\n")

    bad = {"domain_dir": "/nonexistent/domain",
           "contrastive_dir": "/nonexistent/contrastive", "window": 0}
    write(os.path.join(FIXTURES, "bad_config.json"),
          json.dumps(bad, indent=2) + "\n")

    print("fixtures written under", os.path.normpath(FIXTURES))


if __name__ == "__main__":
    main()
