import { ApiClient } from "./api.js";
import type { Ctx, Step } from "./context.js";
import { POLL_INTERVAL_MS } from "./jobs.js";
import type { Project } from "./types.js";
import { renderBriefForm, renderUploadList } from "./views/brief.js";
import { renderMusicAndPreview } from "./views/music.js";
import { renderScriptEditor } from "./views/script.js";
import { renderVisualStage } from "./views/visuals.js";

export interface AppOptions {
  baseUrl: string;
  pollIntervalMs?: number;
}

export class App implements Ctx {
  readonly api: ApiClient;
  readonly pollIntervalMs: number;
  project!: Project;
  step: Step = "brief";

  private readonly stage: HTMLElement;
  private readonly uploadsSlot: HTMLElement;

  constructor(root: HTMLElement, options: AppOptions) {
    this.api = new ApiClient(options.baseUrl);
    this.pollIntervalMs = options.pollIntervalMs ?? POLL_INTERVAL_MS;
    const doc = root.ownerDocument;
    root.innerHTML = "";
    this.uploadsSlot = doc.createElement("div");
    this.uploadsSlot.className = "uploads-slot";
    this.stage = doc.createElement("main");
    this.stage.className = "stage";
    root.appendChild(this.uploadsSlot);
    root.appendChild(this.stage);
    this.renderStep();
  }

  setProject(project: Project): void {
    this.project = project;
    renderUploadList(this.uploadsSlot, project.uploads, (uploadId, description) => {
      void (async () => {
        await this.api.patchUpload(project.id, uploadId, description);
        this.setProject(await this.refreshProject());
      })();
    });
  }

  async refreshProject(): Promise<Project> {
    return this.api.getProject(this.project.id);
  }

  goto(step: Step): void {
    this.step = step;
    this.renderStep();
  }

  private renderStep(): void {
    switch (this.step) {
      case "brief":
        renderBriefForm(this.stage, {
          api: this.api,
          pollIntervalMs: this.pollIntervalMs,
          onReady: (project) => {
            this.setProject(project);
            this.goto("script");
          },
        });
        break;
      case "script":
        renderScriptEditor(this.stage, this);
        break;
      case "visuals":
        renderVisualStage(this.stage, this);
        break;
      case "music":
        renderMusicAndPreview(this.stage, this);
        break;
    }
  }
}

export function initApp(root: HTMLElement, options: AppOptions): App {
  return new App(root, options);
}
