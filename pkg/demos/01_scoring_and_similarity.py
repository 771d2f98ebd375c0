"""
Sentiment scoring and fuzzy string matching
===========================================

"""

from moodreel import (best_match, default_lexicon, dice_similarity,
                      positivity_score)

lexicon = default_lexicon()

# 50 is neutral; each comparative sentiment point moves the score by 10
print(positivity_score("What a wonderful morning for a ride", "", lexicon))
print(positivity_score("Stuck again. This commute is a disaster", "", lexicon))
print(positivity_score("The train arrives at nine", "", lexicon))

# scene text and image description are scored together
score = positivity_score("Join us tomorrow",
                         "a happy crowd in a sunlit park", lexicon)
print("combined:", score.value)

# bigram similarity is case- and whitespace-insensitive
print(dice_similarity("night", "nacht"))
print(dice_similarity("Green Park", "green park"))

# best_match picks the closest candidate, ties to the lowest index
captions = ["a cyclist waiting at a red light",
            "an empty platform at dawn",
            "a crowded subway door"]
idx, score = best_match("crowded doors on the subway", captions)
print(captions[idx], round(score, 3))
