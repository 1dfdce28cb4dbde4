#!/usr/bin/env python3
"""Generate the bundled resource files under crates/core/data.

Writes lexicon.tsv, degree_words.tsv, locations.tsv, stopwords.txt, the three
pronoun lists, seeds.tsv and thesaurus.tsv. Run from anywhere.
"""

import os
from pathlib import Path

os.chdir(Path(__file__).resolve().parent.parent / "crates" / "core" / "data")

words = {
 "HAPPINESS": {
  "STRONG": "ecstatic overjoyed elated thrilled euphoric jubilant blissful exhilarated love adore wonderful fantastic awesome excellent brilliant superb marvelous fabulous triumphant rapture delirious",
  "MEDIUM": "happy delighted joyful cheerful glad pleased excited enjoy fun great proud grateful thankful blessed celebrate smile laugh yay hooray beautiful sweet merry jolly gleeful satisfied hopeful optimistic enthusiastic fortunate glorious heavenly yippee woohoo perfect charmed cheery chirpy upbeat sunny playful giggle hug radiant jovial",
  "LIGHT": "lucky good nice fine cool pleasant calm relaxed comfortable peaceful amused positive cozy chill lol haha content okay refreshed agreeable mellow serene",
 },
 "SADNESS": {
  "STRONG": "devastated heartbroken miserable depressed despair grief tragic anguish hopeless inconsolable weep sob agony desolate crushed mourn",
  "MEDIUM": "sad unhappy upset cry tears lonely hurt sorry disappointed regret gloomy melancholy heartache sorrow grieve miss pain dismal lonesome homesick broken heartbreak woeful forlorn dejected despondent crestfallen somber wretched bereaved lament",
  "LIGHT": "bored tired meh sigh unfortunate blah exhausted dull bummed moody glum downcast wistful downhearted listless",
 },
 "FEAR": {
  "STRONG": "afraid terrified petrified panic dread fear frightened terror phobia nightmare horrified",
  "MEDIUM": "scared anxious nervous worried alarmed threatened insecure tense spooked creepy scary horror paranoid apprehensive unsafe danger shaky fright jumpy panicky trembling shudder intimidated vulnerable haunted scream freaked hysterical",
  "LIGHT": "concerned uneasy timid hesitant wary jittery restless doubtful shy edgy",
 },
 "ANGER": {
  "STRONG": "irritated furious enraged outraged livid rage hate infuriated fuming seething wrath hostile vengeful irate",
  "MEDIUM": "angry mad annoyed frustrated pissed bitter resent grumpy offended aggravated agitated hatred rant yell temper provoked exasperated indignant fury spiteful vexed incensed belligerent heated disrespect insulted betrayed",
  "LIGHT": "irked bothered displeased grumble sulky cranky touchy impatient peeved miffed",
 },
 "SURPRISE": {
  "STRONG": "shocked astonished stunned astounded flabbergasted speechless omg unbelievable dumbfounded",
  "MEDIUM": "surprised amazed startled unexpected wow whoa unreal bewildered incredible sudden awestruck gobsmacked staggered mindblown unforeseen flummoxed",
  "LIGHT": "curious puzzled strange weird unusual intrigued baffled perplexed dazed surreal",
 },
 "DISGUST": {
  "STRONG": "repugnance disgusted revolting nauseating repulsive vile gross sickening abhor loathe horrible detest despicable hideous yuck eww",
  "MEDIUM": "nasty filthy distaste awful foul dirty rotten offensive stink disgrace shameful appalled ugh revulsion queasy sleazy obscene putrid rancid slimy contempt scorn repelled lousy trashy gag",
  "LIGHT": "unpleasant icky tacky unappetizing messy smelly",
 },
}
emoticons = {
 "HAPPINESS": {
  "STRONG": ":D :-D =D xD XD :)) :-)) <3 \\o/ ^_^ ^^ ^.^ :'-) :') =))",
  "MEDIUM": ":) :-) =) :] :-] :} (: ;) ;-) :P :-P :p :3 8) 8-) B-) :o) :^) =] :* :-* ;D c: C:",
 },
 "SADNESS": {
  "STRONG": ":( :-( :'( :'-( ;( T_T T.T ;_; :(( :-(( </3 =((",
  "MEDIUM": "=( :[ :-[ ): :c :-c QQ :-< :<",
 },
 "FEAR": {
  "STRONG": "D: D-: D8 D; D=",
  "MEDIUM": ":S :-S :$ :-$ o_O O_o",
 },
 "ANGER": {
  "STRONG": ">:( >:-( >:[ :@ :-@ >:O >:-O",
  "MEDIUM": ">_< -_- :-|| >:| >.< >:/",
 },
 "SURPRISE": {
  "STRONG": ":O :-O O_O O.O :0 :-0 8O =O",
  "MEDIUM": ":o :-o o_o o.O O.o =o",
 },
 "DISGUST": {
  "STRONG": ":-& :& x( X( :-X",
  "MEDIUM": ":/ :-/ =/ :\\ :-\\ >:P",
 },
}
out = ["# Emotion-words set: surface<TAB>category<TAB>intensity[<TAB>kind]",
       "# kind defaults to WORD. Emoticons carry STRONG or MEDIUM only.", ""]
nw = ne = 0
for cat, d in words.items():
    out.append(f"# {cat}")
    for inten, ws in d.items():
        for w in ws.split():
            out.append(f"{w}\t{cat}\t{inten}"); nw += 1
    out.append("")
for cat, d in emoticons.items():
    out.append(f"# {cat} emoticons")
    for inten, ws in d.items():
        for w in ws.split():
            out.append(f"{w}\t{cat}\t{inten}\tEMOTICON"); ne += 1
    out.append("")
open("lexicon.tsv","w").write("\n".join(out))
print(nw, ne)

deg = {
 "H": "too very so really extremely super totally absolutely completely incredibly highly deeply truly utterly terribly more most especially particularly seriously soo sooo insanely",
 "L": "nearly slightly somewhat barely kinda sorta fairly rather mildly almost less quite",
 "N": "not no never hardly don't dont doesn't doesnt didn't didnt isn't isnt wasn't wasnt aren't won't can't cant cannot neither nor nothing nobody without ain't",
}
lines = ["# Degree words: word<TAB>H|L|N", "# H amplifies, L weakens, N negates the nearest following emotion word."]
for d, ws in deg.items():
    for w in ws.split():
        lines.append(f"{w}\t{d}")
open("degree_words.tsv","w").write("\n".join(lines)+"\n")
print("degree", sum(len(v.split()) for v in deg.values()))
locs = [("New Delhi",1484),("Mumbai",603),("Bengaluru",741),("Kolkata",205),("Chennai",426),("Hyderabad",650),
        ("Pune",331),("Ahmedabad",464),("Jaipur",467),("Lucknow",631),("Kanpur",403),("Nagpur",218),("Indore",530),
        ("Bhopal",463),("Patna",250),("Chandigarh",114),("Surat",327),("Vadodara",220),("Ludhiana",310),("Agra",188)]
open("locations.tsv","w").write("# Location areas: name<TAB>area in square kilometres\n" + "".join(f"{n}\t{a}\n" for n,a in locs))
stop = """a about above after again against all am an and any are as at be because been before being below between both but by
could did do does doing down during each few for from further had has have having he her here hers herself him himself his how
i if in into is it its itself me my myself of off on once only or other our ours ourselves out over own same she should
some such than that the their theirs them themselves then there these they this those through to under until up was we were
what when where which while who whom why will with would you your yours yourself yourselves im i'm i've i'd i'll you're you've
you'd you'll he's she's it's we're we've they're they've let's that's there's what's here's who's also get got go going
gonna wanna can just now today tomorrow yesterday day time one two back still even much many every something anything
everything ever yet via per us u ur rt amp http https www com feel feeling felt feels see saw seen know think make made"""
ws = stop.split()
assert len(ws) == len(set(ws)), [w for w in ws if ws.count(w) > 1]
open("stopwords.txt","w").write("\n".join(ws)+"\n")
print("stop", len(ws))
open("pronouns_first.txt","w").write("\n".join("i me my mine myself we us our ours ourselves im i'm i've i'd i'll we're we've we'll".split())+"\n")
open("pronouns_second.txt","w").write("\n".join("you your yours yourself yourselves u ur you're you've you'd you'll ya".split())+"\n")
open("pronouns_third.txt","w").write("\n".join("he him his himself she her hers herself they them their theirs themselves he's she's they're they've he'd she'd".split())+"\n")
seeds = {
 "HAPPINESS": "happy love excited great awesome glad yay fun :) :D <3 wonderful",
 "SADNESS": "sad cry lonely miss depressed heartbroken :( :'(",
 "FEAR": "afraid scared terrified nervous anxious worried D:",
 "ANGER": "angry furious hate annoyed pissed mad >:(",
 "SURPRISE": "surprised shocked wow omg unexpected :O",
 "DISGUST": "disgusted gross yuck nasty eww revolting",
}
lines = ["# Seed words: surface<TAB>category (HAPPINESS deliberately carries more seeds)"]
for c, ws in seeds.items():
    for w in ws.split():
        lines.append(f"{w}\t{c}")
open("seeds.tsv","w").write("\n".join(lines)+"\n")
th = [
 ("happy","glad","cheerful","joyful","delighted"),("glad","happy","pleased"),("cheerful","merry","jolly","sunny"),
 ("joyful","jubilant","gleeful"),("sad","unhappy","sorrowful","gloomy"),("unhappy","miserable","sad"),("gloomy","dismal","glum"),
 ("afraid","scared","frightened","fearful"),("scared","terrified","petrified"),("angry","furious","mad","irate"),
 ("furious","enraged","livid","fuming"),("surprised","astonished","amazed","startled"),("astonished","stunned","astounded"),
 ("disgusted","repelled","revolted","sickened"),("revolted","nauseated","appalled"),
]
open("thesaurus.tsv","w").write("# Synonym adjacency: word<TAB>synonym<TAB>synonym...\n" + "".join("\t".join(r)+"\n" for r in th))
