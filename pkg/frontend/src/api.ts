import type {
  Brief,
  Job,
  Manifest,
  Project,
  Scene,
  ScenePatch,
  Selections,
  SelectionsPatch,
  SongList,
  SongRank,
  Upload,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
    public readonly body: Record<string, unknown> = {},
  ) {
    super(`${status}: ${detail}`);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly fetchImpl: FetchLike;

  constructor(
    public readonly baseUrl: string,
    fetchImpl?: FetchLike,
  ) {
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const data = await resp.json().catch(() => ({}));
    if (!resp.ok) {
      const detail = typeof data.detail === "string" ? data.detail : resp.statusText;
      throw new ApiError(resp.status, detail, data);
    }
    return data as T;
  }

  createProject(brief: Brief, withMood = true, seed = 0): Promise<Project> {
    return this.request("POST", "/projects", { ...brief, with_mood: withMood, seed });
  }

  getProject(id: string): Promise<Project> {
    return this.request("GET", `/projects/${id}`);
  }

  addUpload(projectId: string, imageB64: string, description?: string): Promise<Upload> {
    return this.request("POST", `/projects/${projectId}/uploads`, {
      image_b64: imageB64,
      description: description ?? null,
    });
  }

  patchUpload(projectId: string, uploadId: string, description: string): Promise<Upload> {
    return this.request("PATCH", `/projects/${projectId}/uploads/${uploadId}`, { description });
  }

  runStage(projectId: string, stage: "script" | "visuals" | "music"): Promise<Job> {
    return this.request("POST", `/projects/${projectId}/stages/${stage}`);
  }

  getJob(id: string): Promise<Job> {
    return this.request("GET", `/jobs/${id}`);
  }

  patchScene(projectId: string, index: number, patch: ScenePatch): Promise<Scene> {
    return this.request("PATCH", `/projects/${projectId}/scenes/${index}`, patch);
  }

  regenerateScene(projectId: string, index: number, goal?: string, positivity?: number): Promise<Scene> {
    const body: Record<string, unknown> = { regenerate: true };
    if (goal !== undefined) body.goal = goal;
    if (positivity !== undefined) body.positivity = positivity;
    return this.request("PATCH", `/projects/${projectId}/scenes/${index}`, body);
  }

  postSelections(projectId: string, patch: SelectionsPatch): Promise<Selections> {
    return this.request("POST", `/projects/${projectId}/selections`, patch);
  }

  getSongs(projectId: string, rank: SongRank = "match"): Promise<SongList> {
    return this.request("GET", `/projects/${projectId}/songs?rank=${rank}`);
  }

  getManifest(projectId: string): Promise<Manifest> {
    return this.request("GET", `/projects/${projectId}/manifest`);
  }

  fileUrl(projectId: string, path: string): string {
    return `${this.baseUrl}/projects/${projectId}/files/${path}`;
  }
}
