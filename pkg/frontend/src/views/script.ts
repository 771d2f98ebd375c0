import { ApiError } from "../api.js";
import { renderBadge } from "../badges.js";
import type { Ctx } from "../context.js";
import type { Scene } from "../types.js";

// Per-scene editor card. Edits are shown immediately and rolled back to the
// last server copy when the API rejects them.
function renderCard(ctx: Ctx, scene: Scene): HTMLElement {
  const doc = document;
  let server = scene;

  const card = doc.createElement("article");
  card.className = "scene-card";
  card.dataset.sceneIndex = String(scene.index);

  const head = doc.createElement("header");
  const goal = doc.createElement("span");
  goal.className = "goal-chip";
  goal.textContent = server.narrative_goal || "(no goal)";
  head.appendChild(goal);
  head.appendChild(renderBadge(doc, server.positivity));
  card.appendChild(head);

  const text = doc.createElement("textarea");
  text.className = "scene-text";
  text.value = server.text;
  card.appendChild(text);

  const description = doc.createElement("input");
  description.className = "scene-description";
  description.value = server.image_description;
  card.appendChild(description);

  const error = doc.createElement("p");
  error.className = "card-error";

  const refresh = (scene: Scene) => {
    server = scene;
    text.value = scene.text;
    description.value = scene.image_description;
    goal.textContent = scene.narrative_goal || "(no goal)";
    const badge = card.querySelector(".badge");
    if (badge) badge.replaceWith(renderBadge(doc, scene.positivity));
    error.textContent = "";
  };

  const save = doc.createElement("button");
  save.type = "button";
  save.className = "scene-save";
  save.textContent = "Save";
  save.addEventListener("click", () => {
    void (async () => {
      try {
        refresh(await ctx.api.patchScene(ctx.project.id, server.index, {
          text: text.value,
          image_description: description.value,
        }));
        ctx.setProject(await ctx.refreshProject());
      } catch (err) {
        // roll the inputs back to the committed copy
        text.value = server.text;
        description.value = server.image_description;
        error.textContent = err instanceof ApiError ? err.detail : String(err);
      }
    })();
  });
  card.appendChild(save);

  const regen = doc.createElement("button");
  regen.type = "button";
  regen.className = "scene-regenerate";
  regen.textContent = "Regenerate";
  regen.addEventListener("click", () => {
    regen.disabled = true;
    void (async () => {
      try {
        refresh(await ctx.api.regenerateScene(ctx.project.id, server.index));
        ctx.setProject(await ctx.refreshProject());
      } catch (err) {
        error.textContent = err instanceof ApiError ? err.detail : String(err);
      } finally {
        regen.disabled = false;
      }
    })();
  });
  card.appendChild(regen);

  card.appendChild(error);
  return card;
}

export function renderScriptEditor(root: HTMLElement, ctx: Ctx): void {
  const doc = root.ownerDocument;
  root.innerHTML = "";

  const heading = doc.createElement("h2");
  heading.textContent = "Script";
  root.appendChild(heading);

  const cards = doc.createElement("div");
  cards.className = "scene-cards";
  for (const scene of ctx.project.scenes ?? []) {
    cards.appendChild(renderCard(ctx, scene));
  }
  root.appendChild(cards);

  const next = doc.createElement("button");
  next.type = "button";
  next.className = "goto-visuals";
  next.textContent = "Continue to visuals";
  next.addEventListener("click", () => ctx.goto("visuals"));
  root.appendChild(next);
}
