import { ApiClient, ApiError } from "../api.js";
import { pollJob } from "../jobs.js";
import type { Brief, Project, Upload } from "../types.js";

export interface BriefFormOptions {
  api: ApiClient;
  pollIntervalMs: number;
  onReady: (project: Project) => void;
}

interface PendingUpload {
  imageB64: string;
  name: string;
}

function field(doc: Document, name: string, label: string, multiline: boolean): HTMLElement {
  const wrap = doc.createElement("label");
  wrap.className = `field field-${name}`;
  const caption = doc.createElement("span");
  caption.textContent = label;
  wrap.appendChild(caption);
  const input = multiline ? doc.createElement("textarea") : doc.createElement("input");
  input.setAttribute("name", name);
  wrap.appendChild(input);
  return wrap;
}

export function renderBriefForm(root: HTMLElement, options: BriefFormOptions): void {
  const doc = root.ownerDocument;
  root.innerHTML = "";

  const form = doc.createElement("form");
  form.className = "brief-form";
  form.appendChild(field(doc, "audience", "Audience", false));
  form.appendChild(field(doc, "problem", "Problem", true));
  form.appendChild(field(doc, "action", "Call to action", true));
  form.appendChild(field(doc, "mood", "Target mood", false));

  const moodToggle = doc.createElement("label");
  moodToggle.className = "field field-with-mood";
  const toggle = doc.createElement("input");
  toggle.type = "checkbox";
  toggle.checked = true;
  toggle.setAttribute("name", "with_mood");
  moodToggle.appendChild(toggle);
  moodToggle.appendChild(doc.createTextNode(" condition all stages on the mood"));
  form.appendChild(moodToggle);

  // queued image uploads, sent right after the project exists
  const pending: PendingUpload[] = [];
  const uploadWrap = doc.createElement("div");
  uploadWrap.className = "upload-queue";
  const picker = doc.createElement("input");
  picker.type = "file";
  picker.accept = "image/*";
  picker.multiple = true;
  const queueList = doc.createElement("ul");
  picker.addEventListener("change", () => {
    const files = picker.files ? Array.from(picker.files) : [];
    for (const file of files) {
      const reader = new FileReader();
      reader.onload = () => {
        const url = String(reader.result);
        pending.push({ imageB64: url.slice(url.indexOf(",") + 1), name: file.name });
        const item = doc.createElement("li");
        item.textContent = file.name;
        queueList.appendChild(item);
      };
      reader.readAsDataURL(file);
    }
  });
  uploadWrap.appendChild(picker);
  uploadWrap.appendChild(queueList);
  form.appendChild(uploadWrap);

  const error = doc.createElement("p");
  error.className = "form-error";
  form.appendChild(error);

  const submit = doc.createElement("button");
  submit.type = "submit";
  submit.className = "brief-submit";
  submit.textContent = "Create campaign";
  form.appendChild(submit);

  const status = doc.createElement("p");
  status.className = "brief-status";
  form.appendChild(status);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const value = (name: string) =>
      (form.querySelector(`[name=${name}]`) as HTMLInputElement | HTMLTextAreaElement).value.trim();
    const brief: Brief = {
      audience: value("audience"),
      problem: value("problem"),
      action: value("action"),
      mood: value("mood"),
    };
    const missing = Object.entries(brief).filter(([, v]) => !v).map(([k]) => k);
    if (missing.length > 0) {
      error.textContent = `missing: ${missing.join(", ")}`;
      return;
    }
    error.textContent = "";
    submit.disabled = true;
    status.textContent = "creating project...";
    void (async () => {
      try {
        let project = await options.api.createProject(brief, toggle.checked);
        for (const upload of pending) {
          await options.api.addUpload(project.id, upload.imageB64);
        }
        status.textContent = "drafting script...";
        const job = await options.api.runStage(project.id, "script");
        await pollJob(options.api, job.id, options.pollIntervalMs);
        project = await options.api.getProject(project.id);
        options.onReady(project);
      } catch (err) {
        submit.disabled = false;
        status.textContent = "";
        error.textContent = err instanceof ApiError ? err.detail : String(err);
      }
    })();
  });

  root.appendChild(form);
}

export function renderUploadList(
  root: HTMLElement,
  uploads: Upload[],
  onEdit: (uploadId: string, description: string) => void,
): void {
  const doc = root.ownerDocument;
  root.innerHTML = "";
  const list = doc.createElement("ul");
  list.className = "upload-list";
  for (const upload of uploads) {
    const item = doc.createElement("li");
    item.dataset.uploadId = upload.id;
    const input = doc.createElement("input");
    input.value = upload.description;
    input.className = "upload-description";
    input.addEventListener("change", () => onEdit(upload.id, input.value));
    item.appendChild(input);
    list.appendChild(item);
  }
  root.appendChild(list);
}
