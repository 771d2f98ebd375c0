// One fixed three-band mapping for positivity badges, used by every view:
// [0, 33] negative, (33, 67) neutral, [67, 100] positive.

export type Band = "negative" | "neutral" | "positive";

export const BAND_COLORS: Record<Band, string> = {
  negative: "#c0392b",
  neutral: "#8a6d1a",
  positive: "#1e8449",
};

export function positivityBand(score: number): Band {
  if (score < 0 || score > 100) {
    throw new RangeError(`positivity ${score} out of [0, 100]`);
  }
  if (score <= 33) return "negative";
  if (score < 67) return "neutral";
  return "positive";
}

export function badgeColor(score: number): string {
  return BAND_COLORS[positivityBand(score)];
}

// Scores come straight from the API; the badge only colors them.
export function renderBadge(doc: Document, score: number): HTMLElement {
  const badge = doc.createElement("span");
  badge.className = "badge";
  badge.dataset.band = positivityBand(score);
  badge.style.backgroundColor = badgeColor(score);
  badge.textContent = String(score);
  return badge;
}
