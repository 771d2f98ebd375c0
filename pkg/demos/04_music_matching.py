"""
Picking songs by valence and energy
===================================

"""

from moodreel import default_palette, mock_provider_set
from moodreel.pipeline import mood_energy, rank_by_popularity, recommend_songs
from moodreel.providers import load_song_catalog, sample_catalog_path

catalog = load_song_catalog(sample_catalog_path())
palette = default_palette()
providers = mock_provider_set()

# palette moods carry a configured energy target
calm = mood_energy("calm", palette, providers)
excited = mood_energy("excited", palette, providers)
print("calm ->", calm, " excited ->", excited)

# free-text moods cost one provider round-trip, cached per project
cache = {}
print("tranquil ->", mood_energy("tranquil", palette, providers, cache))

# nearest neighbours in the (valence, energy) unit square
# target valence comes from average scene positivity rescaled to [0, 1]
for song in recommend_songs(catalog, avg_positivity=62, mood_energy=calm, k=5):
    print(f"  {song.id}  v={song.valence:.2f} e={song.energy:.2f}  {song.title}")

print()
print("most popular instead:")
for song in rank_by_popularity(catalog)[:5]:
    print(f"  {song.id}  pop={song.popularity:.0f}  {song.title}")
