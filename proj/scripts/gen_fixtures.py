#!/usr/bin/env python3
#
# Copyright 2026 The gecsynth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Writes the fixture inflection lexicon and a synthetic tagged corpus.

The lexicon is a small hand-made Icelandic paradigm table. The corpus is
built from clause templates over that table, so every token is tagged
consistently with the lexicon. Output is deterministic for a given seed.

    gen_fixtures.py --out DIR [--sentences N] [--seed S] [--no-corpus]
"""

import argparse
import os
import random

CASES = ("nom", "acc", "dat", "gen")
PERSONS = (("1", "sg"), ("2", "sg"), ("3", "sg"), ("1", "pl"), ("3", "pl"))

# lemma: (gender, singular forms, plural forms or None)
NOUNS = {
    "hestur": ("m", "hestur hest hesti hests", "hestar hesta hestum hesta"),
    "maður": ("m", "maður mann manni manns", "menn menn mönnum manna"),
    "dagur": ("m", "dagur dag degi dags", "dagar daga dögum daga"),
    "skóli": ("m", "skóli skóla skóla skóla", "skólar skóla skólum skóla"),
    "bíll": ("m", "bíll bíl bíl bíls", "bílar bíla bílum bíla"),
    "vinur": ("m", "vinur vin vini vinar", "vinir vini vinum vina"),
    "bær": ("m", "bær bæ bæ bæjar", "bæir bæi bæjum bæja"),
    "Páll": ("m", "Páll Pál Páli Páls", None),
    "kona": ("f", "kona konu konu konu", "konur konur konum kvenna"),
    "bók": ("f", "bók bók bók bókar", "bækur bækur bókum bóka"),
    "ástæða": ("f", "ástæða ástæðu ástæðu ástæðu",
               "ástæður ástæður ástæðum ástæðna"),
    "vinna": ("f", "vinna vinnu vinnu vinnu", None),
    "atvinna": ("f", "atvinna atvinnu atvinnu atvinnu", None),
    "búð": ("f", "búð búð búð búðar", "búðir búðir búðum búða"),
    "fólksfækkun": ("f", "fólksfækkun fólksfækkun fólksfækkun fólksfækkunar",
                    None),
    "auglýsing": ("f", "auglýsing auglýsingu auglýsingu auglýsingar",
                  "auglýsingar auglýsingar auglýsingum auglýsinga"),
    "atvinnuauglýsing": (
        "f",
        "atvinnuauglýsing atvinnuauglýsingu atvinnuauglýsingu "
        "atvinnuauglýsingar",
        "atvinnuauglýsingar atvinnuauglýsingar atvinnuauglýsingum "
        "atvinnuauglýsinga"),
    "skólabók": ("f", "skólabók skólabók skólabók skólabókar",
                 "skólabækur skólabækur skólabókum skólabóka"),
    "bókabúð": ("f", "bókabúð bókabúð bókabúð bókabúðar",
                "bókabúðir bókabúðir bókabúðum bókabúða"),
    "Reykjavík": ("f", "Reykjavík Reykjavík Reykjavík Reykjavíkur", None),
    "hús": ("n", "hús hús húsi húss", "hús hús húsum húsa"),
    "barn": ("n", "barn barn barni barns", "börn börn börnum barna"),
    "fjall": ("n", "fjall fjall fjalli fjalls", "fjöll fjöll fjöllum fjalla"),
    "land": ("n", "land land landi lands", "lönd lönd löndum landa"),
    "bragð": ("n", "bragð bragð bragði bragðs", None),
    "afbragð": ("n", "afbragð afbragð afbragði afbragðs", None),
    "leysi": ("n", "leysi leysi leysi leysis", None),
    "atvinnuleysi": ("n", "atvinnuleysi atvinnuleysi atvinnuleysi "
                          "atvinnuleysis", None),
    "sumar": ("n", "sumar sumar sumri sumars", "sumur sumur sumrum sumra"),
    "sumarhús": ("n", "sumarhús sumarhús sumarhúsi sumarhúss",
                 "sumarhús sumarhús sumarhúsum sumarhúsa"),
    "Norðurland": ("n", "Norðurland Norðurland Norðurlandi Norðurlands", None),
}

# Definite forms used by the corpus.
DEFINITE = {
    "atvinnuauglýsing": ("pl", "atvinnuauglýsingarnar atvinnuauglýsingarnar "
                               "atvinnuauglýsingunum atvinnuauglýsinganna"),
}

# lemma: forms in CASES order, with person and number
PRONOUNS = {
    "ég": ("1", "sg", "ég mig mér mín"),
    "þú": ("2", "sg", "þú þig þér þín"),
    "hann": ("3", "sg", "hann hann honum hans"),
    "hún": ("3", "sg", "hún hana henni hennar"),
    "við": ("1", "pl", "við okkur okkur okkar"),
    "þeir": ("3", "pl", "þeir þá þeim þeirra"),
}

# lemma: {gender: (singular, plural)}
ADJECTIVES = {
    "góður": {"m": ("góður góðan góðum góðs", "góðir góða góðum góðra"),
              "f": ("góð góða góðri góðrar", "góðar góðar góðum góðra"),
              "n": ("gott gott góðu góðs", "góð góð góðum góðra")},
    "stór": {"m": ("stór stóran stórum stórs", "stórir stóra stórum stórra"),
             "f": ("stór stóra stórri stórrar", "stórar stórar stórum stórra"),
             "n": ("stórt stórt stóru stórs", "stór stór stórum stórra")},
    "nýr": {"m": ("nýr nýjan nýjum nýs", "nýir nýja nýjum nýrra"),
            "f": ("ný nýja nýrri nýrrar", "nýjar nýjar nýjum nýrra"),
            "n": ("nýtt nýtt nýju nýs", "ný ný nýjum nýrra")},
    "gamall": {"m": ("gamall gamlan gömlum gamals",
                     "gamlir gamla gömlum gamalla"),
               "f": ("gömul gamla gamalli gamallar",
                     "gamlar gamlar gömlum gamalla"),
               "n": ("gamalt gamalt gömlu gamals", "gömul gömul gömlum gamalla")},
}

# lemma: (indicative, subjunctive, infinitive or None); present tense in
# PERSONS order. Impersonal verbs list the third person singular only.
VERBS = {
    "hlakka": ("hlakka hlakkar hlakkar hlökkum hlakka",
               "hlakki hlakkir hlakki hlökkum hlakki", "hlakka"),
    "kvíða": ("kvíði kvíðir kvíðir kvíðum kvíða",
              "kvíði kvíðir kvíði kvíðum kvíði", "kvíða"),
    "leita": ("leita leitar leitar leitum leita",
              "leiti leitir leiti leitum leiti", "leita"),
    "skoða": ("skoða skoðar skoðar skoðum skoða",
              "skoði skoðir skoði skoðum skoði", "skoða"),
    "fara": ("fer ferð fer förum fara", "fari farir fari förum fari", "fara"),
    "lesa": ("les lest les lesum lesa", "lesi lesir lesi lesum lesi", "lesa"),
    "kaupa": ("kaupi kaupir kaupir kaupum kaupa",
              "kaupi kaupir kaupi kaupum kaupi", "kaupa"),
    "sjá": ("sé sérð sér sjáum sjá", "sjái sjáir sjái sjáum sjái", "sjá"),
    "eiga": ("á átt á eigum eiga", "eigi eigir eigi eigum eigi", "eiga"),
    "fá": ("fæ færð fær fáum fá", "fái fáir fái fáum fái", "fá"),
    "vera": ("er ert er erum eru", "sé sért sé séum séu", "vera"),
}
IMPERSONAL = {"langa": ("langar", "langi"), "vanta": ("vantar", "vanti"),
              "dreyma": ("dreymir", "dreymi")}

# (surface, pos); lemma = surface
FUNCTION_WORDS = [
    ("á", "fs"), ("í", "fs"), ("af", "fs"), ("um", "fs"), ("með", "fs"),
    ("til", "fs"), ("frá", "fs"), ("fyrir", "fs"), ("að", "fs"),
    ("ekki", "ao"), ("alltaf", "ao"), ("oft", "ao"), ("líka", "ao"),
    ("mjög", "ao"), ("núna", "ao"), ("hér", "ao"), ("vestra", "ao"),
    ("og", "st"), ("en", "st"), ("að", "nhm"),
]

OBLIQUE_VERBS = [("hlakka", "nom", "hlakkar"), ("kvíða", "nom", "kvíðir"),
                 ("langa", "acc", "langar"), ("vanta", "acc", "vantar"),
                 ("dreyma", "acc", "dreymir")]

MISSPELLINGS = [("leita", "leyta"), ("leita", "4eita"), ("alltaf", "altaf"),
                ("hér", "hjer"), ("líka", "lika"), ("mjög", "mjøg"),
                ("ekki", "ekkji"), ("núna", "nuna"), ("vinnu", "vinu")]


def feats(**kv):
  return "|".join(f"{k}={v}" for k, v in sorted(kv.items())) or "_"


def lexicon_entries():
  rows = []
  for lemma, (gender, sg, pl) in NOUNS.items():
    for num, forms in (("sg", sg), ("pl", pl)):
      if forms is None:
        continue
      for case, form in zip(CASES, forms.split()):
        rows.append((form, lemma, "no", feats(case=case, num=num)))
  for lemma, (num, forms) in DEFINITE.items():
    for case, form in zip(CASES, forms.split()):
      rows.append((form, lemma, "no",
                   feats(case=case, definite="yes", num=num)))
  for lemma, (person, num, forms) in PRONOUNS.items():
    for case, form in zip(CASES, forms.split()):
      rows.append((form, lemma, "fn", feats(case=case, num=num, person=person)))
  for lemma, genders in ADJECTIVES.items():
    for gender, (sg, pl) in genders.items():
      for num, forms in (("sg", sg), ("pl", pl)):
        for case, form in zip(CASES, forms.split()):
          rows.append((form, lemma, "lo",
                       feats(case=case, gender=gender, num=num)))
  for lemma, (ind, subj, inf) in VERBS.items():
    for mood, forms in (("ind", ind), ("subj", subj)):
      for (person, num), form in zip(PERSONS, forms.split()):
        rows.append((form, lemma, "so",
                     feats(mood=mood, num=num, person=person)))
    if inf:
      rows.append((inf, lemma, "so", feats(mood="inf")))
  for lemma, (ind, subj) in IMPERSONAL.items():
    for mood, form in (("ind", ind), ("subj", subj)):
      rows.append((form, lemma, "so",
                   feats(mood=mood, num="sg", person="3")))
  for surface, pos in FUNCTION_WORDS:
    rows.append((surface, surface, pos, "_"))
  rows.append(("ein", "einn", "to", feats(case="nom", gender="f", num="sg")))
  seen = set()
  out = []
  for r in rows:
    if r not in seen:
      seen.add(r)
      out.append(r)
  return out


class Builder:
  """Clause templates producing (surface, lemma, pos, feats) tokens."""

  def __init__(self, rng):
    self.rng = rng
    self.common = [n for n in NOUNS if n not in
                   ("Páll", "Norðurland", "Reykjavík", "leysi", "bragð",
                    "fólksfækkun", "atvinna")]

  def noun(self, case, lemma=None, num=None):
    lemma = lemma or self.rng.choice(self.common)
    gender, sg, pl = NOUNS[lemma]
    if num is None:
      num = "pl" if pl and self.rng.random() < 0.35 else "sg"
    forms = (pl if num == "pl" else sg).split()
    form = forms[CASES.index(case)]
    return [(form, lemma, "no", feats(case=case, num=num))], \
        gender, num

  def np(self, case):
    toks, gender, num = self.noun(case)
    if self.rng.random() < 0.5:
      adj = self.rng.choice(list(ADJECTIVES))
      sg, pl = ADJECTIVES[adj][gender]
      form = (pl if num == "pl" else sg).split()[CASES.index(case)]
      toks = [(form, adj, "lo", feats(case=case, gender=gender, num=num))] + toks
    return toks

  def pronoun(self, case, lemma=None):
    lemma = lemma or self.rng.choice(list(PRONOUNS))
    person, num, forms = PRONOUNS[lemma]
    form = forms.split()[CASES.index(case)]
    return [(form, lemma, "fn", feats(case=case, num=num, person=person))], \
        person, num

  def verb(self, lemma, person, num, mood="ind"):
    ind, subj, _ = VERBS[lemma]
    forms = (ind if mood == "ind" else subj).split()
    form = forms[PERSONS.index((person, num))]
    return [(form, lemma, "so",
             feats(mood=mood, num=num, person=person))]

  def impersonal(self, lemma):
    return [(IMPERSONAL[lemma][0], lemma, "so",
             feats(mood="ind", num="sg", person="3"))]

  @staticmethod
  def word(surface, pos):
    return [(surface, surface, pos, "_")]

  def inf(self, lemma):
    return [("að", "að", "nhm", "_"), (VERBS[lemma][2], lemma, "so",
                                       feats(mood="inf"))]

  def adverb(self):
    if self.rng.random() < 0.6:
      return self.word(self.rng.choice(
          ["ekki", "alltaf", "oft", "líka", "mjög", "núna", "hér"]), "ao")
    return []

  def transitive(self):
    subj, person, num = self.pronoun("nom")
    lemma = self.rng.choice(["skoða", "lesa", "kaupa", "sjá", "eiga", "fá"])
    out = subj + self.verb(lemma, person, num) + self.adverb() + self.np("acc")
    prep = self.rng.choice(["á", "í", "frá"])
    return out + self.word(prep, "fs") + self.np("dat")

  def oblique_nominative(self):
    if self.rng.random() < 0.7:
      subj, person, num = self.pronoun("nom")
    else:
      subj, _, num = self.noun("nom", self.rng.choice(["maður", "kona", "vinur"]))
      person = "3"
    lemma = self.rng.choice(["hlakka", "kvíða"])
    out = subj + self.verb(lemma, person, num) + self.adverb()
    if lemma == "hlakka":
      return out + self.word("til", "fs") + self.np("gen")
    return out + self.word("fyrir", "fs") + self.np("dat")

  def oblique_accusative(self):
    if self.rng.random() < 0.3:
      subj, _, _ = self.noun("acc", "Páll", "sg")
    else:
      subj, _, _ = self.pronoun("acc")
    lemma = self.rng.choice(list(IMPERSONAL))
    out = subj + self.impersonal(lemma)
    if lemma == "langa":
      return out + self.inf(self.rng.choice(["fá", "skoða", "kaupa"])) + \
          self.np("acc")
    if lemma == "vanta":
      return out + self.adverb() + self.np("acc")
    return out + self.word("um", "fs") + self.np("acc")

  def copula(self):
    subj, _, num = self.noun("nom")
    gender = NOUNS[subj[0][1]][0]
    adj = self.rng.choice(list(ADJECTIVES))
    sg, pl = ADJECTIVES[adj][gender]
    form = (pl if num == "pl" else sg).split()[0]
    out = subj + self.verb("vera", "3", num) + self.adverb()
    return out + [(form, adj, "lo", feats(case="nom", gender=gender, num=num))]

  def searching(self):
    subj, person, num = self.pronoun("nom")
    out = subj + self.verb("vera", person, num) + self.inf("leita")
    return out + self.word("að", "fs") + self.noun("dat", "vinna", "sg")[0]

  def location(self):
    return self.word("á", "fs") + self.noun("dat", "Norðurland", "sg")[0] + \
        self.word("vestra", "ao")

  def clause(self):
    kind = self.rng.choices(
        [self.transitive, self.oblique_nominative, self.oblique_accusative,
         self.copula, self.searching],
        weights=[4, 2, 2, 2, 1])[0]
    out = kind()
    if self.rng.random() < 0.15:
      out += self.location()
    return out

  def sentence(self):
    tokens = self.clause()
    for _ in range(self.rng.choice([1, 2, 2])):
      joiner = self.rng.choice([[(",", ",", "pun", "_"), ("og", "og", "st", "_")],
                                [(",", ",", "pun", "_"), ("en", "en", "st", "_")],
                                [(",", ",", "pun", "_")],
                                [("og", "og", "st", "_")]])
      tokens += joiner + self.clause()
    tokens.append((".", ".", "pun", "_"))
    first = tokens[0]
    tokens[0] = (first[0][:1].upper() + first[0][1:],) + first[1:]
    return tokens


def fixed_sentences():
  atvinnuleysi = [
      ("Atvinnuleysi", "atvinnuleysi", "no", feats(case="nom", num="sg")),
      ("er", "vera", "so", feats(mood="ind", num="sg", person="3")),
      ("ekki", "ekki", "ao", "_"),
      ("ein", "einn", "to", feats(case="nom", num="sg")),
      ("af", "af", "fs", "_"),
      ("ástæðum", "ástæða", "no", feats(case="dat", num="pl")),
      ("fólksfækkunar", "fólksfækkun", "no", feats(case="gen", num="sg")),
      ("á", "á", "fs", "_"),
      ("Norðurlandi", "Norðurland", "no", feats(case="dat", num="sg")),
      ("vestra", "vestra", "ao", "_"),
      (".", ".", "pun", "_"),
  ]
  leita = [
      ("Ég", "ég", "fn", feats(case="nom", num="sg", person="1")),
      ("er", "vera", "so", feats(mood="ind", num="sg", person="1")),
      ("að", "að", "nhm", "_"),
      ("leita", "leita", "so", feats(mood="inf")),
      ("að", "að", "fs", "_"),
      ("vinnu", "vinna", "no", feats(case="dat", num="sg")),
      ("og", "og", "st", "_"),
      ("mig", "ég", "fn", feats(case="acc", num="sg", person="1")),
      ("langar", "langa", "so", feats(mood="ind", num="sg", person="3")),
      ("að", "að", "nhm", "_"),
      ("fá", "fá", "so", feats(mood="inf")),
      ("að", "að", "nhm", "_"),
      ("skoða", "skoða", "so", feats(mood="inf")),
      ("atvinnuauglýsingarnar", "atvinnuauglýsing", "no",
       feats(case="acc", definite="yes", num="pl")),
      (".", ".", "pun", "_"),
  ]
  return [atvinnuleysi, leita]


def render(tokens):
  text = ""
  for i, (surface, _, pos, _) in enumerate(tokens):
    if i > 0 and pos != "pun":
      text += " "
    text += surface
  return text


def write_corpus(path, n, seed):
  rng = random.Random(seed)
  builder = Builder(rng)
  sentences = fixed_sentences()
  while len(sentences) < n:
    sentences.append(builder.sentence())
  with open(path, "w", encoding="utf-8", newline="\n") as f:
    for i, tokens in enumerate(sentences[:n], start=1):
      f.write(f"# id = s{i:05d}\n# text = {render(tokens)}\n")
      for surface, lemma, pos, fs in tokens:
        f.write(f"{surface}\t{lemma}\t{pos}\t{fs}\n")
      f.write("\n")


def write_tsv(path, rows, header):
  with open(path, "w", encoding="utf-8", newline="\n") as f:
    f.write(f"# {header}\n")
    for r in rows:
      f.write("\t".join(r) + "\n")


def main():
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  parser.add_argument("--out", required=True)
  parser.add_argument("--sentences", type=int, default=10000)
  parser.add_argument("--seed", type=int, default=20260101)
  parser.add_argument("--no-corpus", action="store_true")
  args = parser.parse_args()
  os.makedirs(args.out, exist_ok=True)
  write_tsv(os.path.join(args.out, "inflection.tsv"), lexicon_entries(),
            "surface\tlemma\tpos\tfeats")
  write_tsv(os.path.join(args.out, "misspellings.tsv"), MISSPELLINGS,
            "correct\tvariant")
  write_tsv(os.path.join(args.out, "oblique_verbs.tsv"), OBLIQUE_VERBS,
            "lemma\tstandard_case\t3sg_form")
  if not args.no_corpus:
    write_corpus(os.path.join(args.out, "corpus.tagged"), args.sentences,
                 args.seed)


if __name__ == "__main__":
  main()
