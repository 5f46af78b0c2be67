#!/usr/bin/env python3
"""Generates core/resources/porter_vectors.txt.

Data-driven implementation of the original Porter rule tables (longest
matching suffix per step, condition checked once). Kept deliberately
different in shape from the C++ implementation so the two act as
cross-checks on each other.
"""

import os
import re

VOWELS = set("aeiou")


def is_cons(word, i):
    c = word[i]
    if c in VOWELS:
        return False
    if c == "y":
        return True if i == 0 else not is_cons(word, i - 1)
    return True


def forms(word):
    return "".join("c" if is_cons(word, i) else "v" for i in range(len(word)))


def measure(stem):
    collapsed = re.sub("v+", "v", re.sub("c+", "c", forms(stem)))
    return collapsed.count("vc")


def has_vowel(stem):
    return "v" in forms(stem)


def ends_double_cons(word):
    return len(word) >= 2 and word[-1] == word[-2] and is_cons(word, len(word) - 1)


def ends_cvc(word):
    if len(word) < 3:
        return False
    n = len(word)
    if not (is_cons(word, n - 3) and not is_cons(word, n - 2) and is_cons(word, n - 1)):
        return False
    return word[-1] not in "wxy"


def apply_table(word, rules):
    best = None
    for suffix, replacement, cond in rules:
        if word.endswith(suffix) and (best is None or len(suffix) > len(best[0])):
            best = (suffix, replacement, cond)
    if best is None:
        return word
    suffix, replacement, cond = best
    stem = word[: len(word) - len(suffix)]
    if cond is None or cond(stem):
        return stem + replacement
    return word


def m_gt0(stem):
    return measure(stem) > 0


def m_gt1(stem):
    return measure(stem) > 1


STEP1A = [("sses", "ss", None), ("ies", "i", None), ("ss", "ss", None), ("s", "", None)]

STEP2 = [(s, r, m_gt0) for s, r in [
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
]]

STEP3 = [(s, r, m_gt0) for s, r in [
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
]]

STEP4 = [(s, "", m_gt1) for s in [
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
    "ment", "ent", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
]] + [("ion", "", lambda stem: bool(stem) and stem[-1] in "st" and measure(stem) > 1)]


def step1b(word):
    if word.endswith("eed"):
        return word[:-1] if measure(word[:-3]) > 0 else word
    stripped = None
    if word.endswith("ed") and has_vowel(word[:-2]):
        stripped = word[:-2]
    elif word.endswith("ing") and has_vowel(word[:-3]):
        stripped = word[:-3]
    if stripped is None:
        return word
    if stripped.endswith(("at", "bl", "iz")):
        return stripped + "e"
    if ends_double_cons(stripped) and stripped[-1] not in "lsz":
        return stripped[:-1]
    if measure(stripped) == 1 and ends_cvc(stripped):
        return stripped + "e"
    return stripped


def step1c(word):
    if word.endswith("y") and has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


def step5a(word):
    if word.endswith("e"):
        a = measure(word[:-1])
        if a > 1 or (a == 1 and not ends_cvc(word[:-1])):
            return word[:-1]
    return word


def step5b(word):
    if word.endswith("l") and ends_double_cons(word) and measure(word) > 1:
        return word[:-1]
    return word


def stem(word):
    if len(word) <= 2 or not re.fullmatch("[a-z]+", word):
        return word
    word = apply_table(word, STEP1A)
    word = step1b(word)
    word = step1c(word)
    word = apply_table(word, STEP2)
    word = apply_table(word, STEP3)
    word = apply_table(word, STEP4)
    word = step5a(word)
    return step5b(word)


WORDS = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization predication
operator feudalism decisiveness hopefulness callousness formaliti sensitiviti
sensibiliti triplicate formative formalize electriciti electrical hopeful
goodness revival allowance inference airliner gyroscopic adjustable defensible
irritant replacement adjustment dependent adoption homologou communism activate
angulariti homologous effective bowdlerize probate rate cease controll roll
generalizations oscillators abatements abilities absolutely accompanied
accusation achievements acknowledged acquisition administration advertisement
agencies aggressively agreements allegations ambulances amusement
announcements anniversary apologized appearances applications appointments
approximately archaeology arguments arrangements arrested assassination
assistance associations assumptions atmosphere attachments attractions
authorities automatically availability backwardness balconies bankruptcies
bargaining basically batteries beaches beautiful beginnings believing
boundaries broadcasting buildings bureaucracy businesses calculations
campaigns cancellation candidates capabilities carefully casualties
categories celebrations cemeteries ceremonies challenges championships
characteristics charities circumstances civilization classification
collapsed collisions combinations commemoration commissioner communities
comparisons compensation competitions complaints completely complications
conclusions confirmation congratulations connections consciousness
consequences conservation considerable conspiracies constitutional
construction contributions controversies convictions cooperation coordination
corporations corrections correspondent counterparts countries courageous
creativity criticized crowded curiosity customers dangerous deadlines
decisions declarations defendants deficiencies definitions deliveries
demolished demonstrations departments dependencies deposits depression
descriptions destroying destruction deterioration developments differences
difficulties dimensions directories disabilities disappointed disasters
discoveries discrimination discussions dismissed disputes distinguished
distributed divisions documentaries donations dramatically earthquakes
economies editorials educational effectiveness elections electricity
eliminated emergencies emotional emphasized employees encouraging
engagements engineering enterprises entertainment enthusiasm environments
equipment established estimates evacuated evaluations eventually evidently
examinations exceptions exchanges executives exhibitions expansions
expectations expeditions experiences experiments explanations explosions
expressions extensions facilities factories familiar fascinating
fatalities federation festivals finalized firefighters floods forecasting
formations foundations frequencies friendships functionality fundamental
generations geographical governments gradually graduates grievances
guidelines happiness headquarters helicopters historians hospitality
hospitalized households humanitarian identification illustrations
imagination immediately immigration implications importantly impossible
impressions improvements incidents independence indications individuals
industrial infections inflation ingredients inhabitants initiatives
injuries innovations inquiries inspections installations institutions
instructions insurance intelligence intentions interactions international
interpretations interruptions intersections interviews introductions
investigations invitations journalists judgments jurisdictions
justifications kilometers laboratories landmarks languages leadership
legislation liabilities liberation libraries licenses limitations
literature locations machineries magazines maintenance majorities
manufacturing margins marketing measurements mechanisms memberships
memorials metropolitan migrations ministries minorities missionaries
mobilized modifications monuments motivations movements municipalities
museums navigation negotiations neighborhoods newspapers nominations
notifications objections obligations observations occasions occupations
offerings officials operations opinions opportunities oppositions
organizations orientations originally outbreaks outcomes overwhelming
ownership pandemics parliaments participants partnerships passengers
pedestrians penalties pensions performances permissions personalities
perspectives petitions philosophies photographers physicians pipelines
plantations platforms policies politicians populations possibilities
practically precautions predictions preferences preparations presentations
preservation presidencies pressures previously principles priorities
privatization procedures proceedings productions professionals programs
progressively prohibited projections promotions pronouncements properties
proportions proposals prosecutions protections provinces provisions
publications punishments purchases qualifications quantities quarters
questionnaires railways rationally reactions realities recommendations
reconstruction recordings recoveries recruitment reductions redundancies
references reflections reformation refugees regulations rehabilitation
relationships religions relocated remembrance renovations reparations
repetitions replacements reporters representations reputations
requirements reservations residences resignations resolutions resources
responsibilities restaurants restrictions resurrection retirement
revelations revolutionaries revolutions sanctions satisfaction scholarships
scientists sculptures secretaries securities selections sensations
sentences separations settlements shareholders shipments shortages
signatures significance simulations situations societies solidarity
solutions specializations spectators speculation stabilized statements
stations statistics strategies strengthened structures submissions
subscriptions substances suburbs suggestions summaries supervisors
suppliers surroundings survivors suspensions sympathies symptoms
technologies televised temperatures tendencies territories testimonies
theories thousands tournaments traditions transactions transformations
transitions translations transmissions transportation treatments tributes
troubles undergraduate understanding unemployment universities
vaccinations variations vegetables vehicles verification victories
violations visitors vocabularies volunteers warehouses weaknesses
witnesses
"""


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    out_path = os.path.join(here, "..", "core", "resources", "porter_vectors.txt")
    words = sorted(set(WORDS.split()))
    with open(out_path, "w", encoding="ascii") as f:
        f.write("# word<TAB>stem pairs used to pin the stemmer.\n")
        for w in words:
            f.write(f"{w}\t{stem(w)}\n")
    print(f"wrote {len(words)} vectors to {os.path.normpath(out_path)}")


if __name__ == "__main__":
    main()
