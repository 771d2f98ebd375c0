import { ApiError } from "../api.js";
import { renderBadge } from "../badges.js";
import type { Ctx } from "../context.js";
import { pollJob } from "../jobs.js";
import type { Scene } from "../types.js";

function styleCards(ctx: Ctx, doc: Document): HTMLElement {
  const wrap = doc.createElement("div");
  wrap.className = "style-cards";
  const styles = ctx.project.styles ?? [];
  styles.forEach((style, index) => {
    const card = doc.createElement("button");
    card.type = "button";
    card.className = "style-card";
    card.dataset.styleIndex = String(index);
    if (ctx.project.selections.style === index) card.classList.add("selected");
    const name = doc.createElement("strong");
    name.textContent = style.style;
    card.appendChild(name);
    const blurb = doc.createElement("p");
    blurb.textContent = `${style.word}: ${style.explanation}`;
    card.appendChild(blurb);
    card.addEventListener("click", () => {
      void (async () => {
        await ctx.api.postSelections(ctx.project.id, { style: index });
        ctx.setProject(await ctx.refreshProject());
        wrap.querySelectorAll(".style-card").forEach((el) => el.classList.remove("selected"));
        card.classList.add("selected");
      })();
    });
    wrap.appendChild(card);
  });
  return wrap;
}

function colorSwatch(ctx: Ctx, doc: Document): HTMLElement {
  const swatch = doc.createElement("div");
  swatch.className = "color-swatch";
  const color = ctx.project.color;
  if (color) {
    swatch.textContent = `${color.color_description} (energy ${color.energy_score})`;
  } else {
    swatch.textContent = "no color direction (mood conditioning off)";
  }
  return swatch;
}

function sceneFigure(ctx: Ctx, doc: Document, scene: Scene): HTMLElement {
  const figure = doc.createElement("figure");
  figure.className = "scene-figure";
  figure.dataset.sceneIndex = String(scene.index);

  const label = doc.createElement("figcaption");
  label.appendChild(renderBadge(doc, scene.positivity));
  const goal = doc.createElement("span");
  goal.className = "goal-chip";
  goal.textContent = scene.narrative_goal;
  label.appendChild(goal);
  if (scene.images?.restyled) {
    const restyled = doc.createElement("span");
    restyled.className = "restyled-flag";
    restyled.textContent = "restyled upload";
    label.appendChild(restyled);
  }
  figure.appendChild(label);

  if (scene.image_error) {
    const failed = doc.createElement("p");
    failed.className = "image-error";
    failed.textContent = scene.image_error;
    figure.appendChild(failed);
    return figure;
  }
  if (!scene.images) return figure;

  const selectedPath =
    ctx.project.selections.images[String(scene.index)] ?? scene.images.candidates[0];
  const img = doc.createElement("img");
  img.className = "scene-image";
  img.src = ctx.api.fileUrl(ctx.project.id, selectedPath);
  figure.appendChild(img);

  // click-to-open picker with all four candidates
  const picker = doc.createElement("div");
  picker.className = "candidate-picker";
  picker.hidden = true;
  scene.images.candidates.forEach((path, candidate) => {
    const choice = doc.createElement("img");
    choice.className = "candidate";
    choice.dataset.candidate = String(candidate);
    choice.src = ctx.api.fileUrl(ctx.project.id, path);
    choice.addEventListener("click", () => {
      void (async () => {
        await ctx.api.postSelections(ctx.project.id, {
          images: { [String(scene.index)]: candidate },
        });
        ctx.setProject(await ctx.refreshProject());
        img.src = choice.src;
        picker.hidden = true;
      })();
    });
    picker.appendChild(choice);
  });
  img.addEventListener("click", () => {
    picker.hidden = !picker.hidden;
  });
  figure.appendChild(picker);
  return figure;
}

export function renderVisualStage(root: HTMLElement, ctx: Ctx): void {
  const doc = root.ownerDocument;
  root.innerHTML = "";

  const heading = doc.createElement("h2");
  heading.textContent = "Visuals";
  root.appendChild(heading);

  const error = doc.createElement("p");
  error.className = "stage-error";

  const generate = doc.createElement("button");
  generate.type = "button";
  generate.className = "run-visuals";
  generate.textContent = ctx.project.stages.visuals ? "Regenerate visuals" : "Generate visuals";
  generate.addEventListener("click", () => {
    generate.disabled = true;
    void (async () => {
      try {
        const job = await ctx.api.runStage(ctx.project.id, "visuals");
        await pollJob(ctx.api, job.id, ctx.pollIntervalMs);
        ctx.setProject(await ctx.refreshProject());
        renderVisualStage(root, ctx);
      } catch (err) {
        error.textContent = err instanceof ApiError ? err.detail : String(err);
        generate.disabled = false;
      }
    })();
  });
  root.appendChild(generate);
  root.appendChild(error);

  if (ctx.project.stages.visuals) {
    root.appendChild(styleCards(ctx, doc));
    root.appendChild(colorSwatch(ctx, doc));
    const figures = doc.createElement("div");
    figures.className = "scene-figures";
    for (const scene of ctx.project.scenes ?? []) {
      figures.appendChild(sceneFigure(ctx, doc, scene));
    }
    root.appendChild(figures);
  }

  const next = doc.createElement("button");
  next.type = "button";
  next.className = "goto-music";
  next.textContent = "Continue to music";
  next.addEventListener("click", () => ctx.goto("music"));
  root.appendChild(next);
}
