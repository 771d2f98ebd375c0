import { ApiError } from "../api.js";
import { renderBadge } from "../badges.js";
import type { Ctx } from "../context.js";
import { pollJob } from "../jobs.js";
import { SlideshowPreview } from "../preview.js";
import type { Manifest, SongRank } from "../types.js";

function songTable(ctx: Ctx, doc: Document): HTMLElement {
  const wrap = doc.createElement("div");
  wrap.className = "song-list";

  const toggle = doc.createElement("div");
  toggle.className = "rank-toggle";
  const rows = doc.createElement("ul");
  rows.className = "song-rows";

  const load = (rank: SongRank) => {
    void (async () => {
      const listing = await ctx.api.getSongs(ctx.project.id, rank);
      rows.innerHTML = "";
      for (const song of listing.songs) {
        const row = doc.createElement("li");
        row.className = "song-row";
        row.dataset.songId = song.id;
        if (ctx.project.selections.song_id === song.id) row.classList.add("selected");
        row.textContent = `${song.title} (valence ${song.valence.toFixed(2)}, ` +
          `energy ${song.energy.toFixed(2)}, popularity ${song.popularity})`;
        row.addEventListener("click", () => {
          void (async () => {
            await ctx.api.postSelections(ctx.project.id, { song_id: song.id });
            ctx.setProject(await ctx.refreshProject());
            rows.querySelectorAll(".song-row").forEach((el) => el.classList.remove("selected"));
            row.classList.add("selected");
          })();
        });
        rows.appendChild(row);
      }
    })();
  };

  const defaultRank: SongRank = ctx.project.with_mood ? "match" : "popularity";
  (["match", "popularity"] as SongRank[]).forEach((rank) => {
    const button = doc.createElement("button");
    button.type = "button";
    button.className = `rank-${rank}`;
    button.textContent = rank;
    button.disabled = rank === "match" && !ctx.project.with_mood;
    button.addEventListener("click", () => load(rank));
    toggle.appendChild(button);
  });

  wrap.appendChild(toggle);
  wrap.appendChild(rows);
  load(defaultRank);
  return wrap;
}

function timeline(ctx: Ctx, doc: Document, manifest: Manifest, onEdit: () => void): HTMLElement {
  const strip = doc.createElement("ol");
  strip.className = "timeline";
  manifest.scenes.forEach((scene, index) => {
    const entry = doc.createElement("li");
    entry.className = "timeline-entry";
    const thumb = doc.createElement("img");
    thumb.src = ctx.api.fileUrl(ctx.project.id, scene.image);
    entry.appendChild(thumb);
    entry.appendChild(renderBadge(doc, scene.positivity));
    const duration = doc.createElement("input");
    duration.type = "number";
    duration.className = "duration-input";
    duration.step = "0.1";
    duration.value = String(scene.duration_s);
    duration.addEventListener("change", () => {
      void (async () => {
        try {
          await ctx.api.patchScene(ctx.project.id, index, {
            duration_s: Number(duration.value),
          });
          ctx.setProject(await ctx.refreshProject());
          onEdit();
        } catch (err) {
          duration.value = String(scene.duration_s);
          if (!(err instanceof ApiError)) throw err;
        }
      })();
    });
    entry.appendChild(duration);
    strip.appendChild(entry);
  });
  return strip;
}

function previewPane(ctx: Ctx, doc: Document, root: HTMLElement): HTMLElement {
  const pane = doc.createElement("div");
  pane.className = "preview-pane";

  const frame = doc.createElement("img");
  frame.className = "preview-frame";
  const caption = doc.createElement("p");
  caption.className = "preview-caption";
  // the sample catalog ships no audio files; the element stays silent then
  const audio = doc.createElement("audio");
  audio.className = "preview-audio";

  const play = doc.createElement("button");
  play.type = "button";
  play.className = "preview-play";
  play.textContent = "Play preview";

  let active: SlideshowPreview | null = null;
  play.addEventListener("click", () => {
    void (async () => {
      const manifest = await ctx.api.getManifest(ctx.project.id);
      active?.stop();
      pane.dataset.totalS = String(manifest.total_duration_s);
      active = new SlideshowPreview(manifest.scenes, {
        onScene: (index, scene) => {
          pane.dataset.sceneIndex = String(index);
          frame.src = ctx.api.fileUrl(ctx.project.id, scene.image);
          caption.textContent = scene.text;
        },
        onDone: (elapsedMs) => {
          pane.dataset.elapsedMs = String(elapsedMs);
          root.dispatchEvent(new CustomEvent("preview:done", {
            detail: { elapsedMs, totalMs: manifest.total_duration_s * 1000 },
          }));
        },
      });
      void audio.play?.().catch(() => undefined);
      active.start();
    })();
  });

  pane.appendChild(play);
  pane.appendChild(frame);
  pane.appendChild(caption);
  pane.appendChild(audio);
  return pane;
}

export function renderMusicAndPreview(root: HTMLElement, ctx: Ctx): void {
  const doc = root.ownerDocument;
  root.innerHTML = "";

  const heading = doc.createElement("h2");
  heading.textContent = "Music and preview";
  root.appendChild(heading);

  const error = doc.createElement("p");
  error.className = "stage-error";

  const run = doc.createElement("button");
  run.type = "button";
  run.className = "run-music";
  run.textContent = ctx.project.stages.music ? "Re-rank songs" : "Pick music";
  run.addEventListener("click", () => {
    run.disabled = true;
    void (async () => {
      try {
        const job = await ctx.api.runStage(ctx.project.id, "music");
        await pollJob(ctx.api, job.id, ctx.pollIntervalMs);
        ctx.setProject(await ctx.refreshProject());
        renderMusicAndPreview(root, ctx);
      } catch (err) {
        error.textContent = err instanceof ApiError ? err.detail : String(err);
        run.disabled = false;
      }
    })();
  });
  root.appendChild(run);
  root.appendChild(error);

  if (!ctx.project.stages.music) return;

  root.appendChild(songTable(ctx, doc));

  // timeline strip sits left of the preview
  const layout = doc.createElement("div");
  layout.className = "music-layout";
  const timelineSlot = doc.createElement("div");
  timelineSlot.className = "timeline-slot";
  layout.appendChild(timelineSlot);
  layout.appendChild(previewPane(ctx, doc, root));
  root.appendChild(layout);

  const drawTimeline = () => {
    void (async () => {
      try {
        const manifest = await ctx.api.getManifest(ctx.project.id);
        timelineSlot.innerHTML = "";
        timelineSlot.appendChild(timeline(ctx, doc, manifest, drawTimeline));
      } catch (err) {
        timelineSlot.textContent = err instanceof ApiError ? err.detail : String(err);
      }
    })();
  };
  drawTimeline();
}
