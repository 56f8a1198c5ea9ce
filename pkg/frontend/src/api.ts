// HTTP client for the workbench service.  The fetch function is injected
// so tests can run against a scripted transport.

import { Bundle } from "./bundle";

export interface CheckInfo {
  id: string;
  name: string | null;
  status: "unchecked" | "fail" | "pass-bounded";
  bundleRef: string | null;
  error: { error: string; detail: string } | null;
  formulaText: string;
  versionId?: string;
}

export interface VersionInfo {
  id: string;
  timestamp: number;
  tag: string | null;
  checks: CheckInfo[];
  editedCheckId?: string;
}

export interface ProjectInfo {
  id: string;
  name: string;
  versions: string[];
}

export interface ApiErrorBody {
  error: string;
  detail: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: ApiErrorBody,
  ) {
    super(`${body.error}: ${body.detail}`);
  }
}

type Fetch = (input: string, init?: RequestInit) => Promise<Response>;

export class WorkbenchClient {
  constructor(
    private baseUrl: string,
    private fetchFn: Fetch = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      ...init,
      headers: { "content-type": "application/json", ...(init?.headers ?? {}) },
    });
    const body = await response.json();
    if (!response.ok) throw new ApiError(response.status, body as ApiErrorBody);
    return body as T;
  }

  async projects(): Promise<ProjectInfo[]> {
    const body = await this.request<{ projects: ProjectInfo[] }>("/projects");
    return body.projects;
  }

  async versions(projectId: string): Promise<VersionInfo[]> {
    const body = await this.request<{ versions: VersionInfo[] }>(
      `/projects/${projectId}/versions`,
    );
    return body.versions;
  }

  async createProject(name: string, machine: string): Promise<ProjectInfo> {
    const body = await this.request<{ project: ProjectInfo }>("/projects", {
      method: "POST",
      body: JSON.stringify({ name, machine }),
    });
    return body.project;
  }

  async createCheck(
    projectId: string,
    versionId: string,
    formulaText: string,
    name?: string,
  ): Promise<CheckInfo> {
    const body = await this.request<{ check: CheckInfo }>(
      `/projects/${projectId}/versions/${versionId}/checks`,
      { method: "POST", body: JSON.stringify({ formulaText, name: name ?? null }) },
    );
    return body.check;
  }

  async runCheck(checkId: string, bound?: number): Promise<CheckInfo> {
    const query = bound === undefined ? "" : `?bound=${bound}`;
    const body = await this.request<{ check: CheckInfo }>(
      `/checks/${checkId}/run${query}`,
      { method: "POST" },
    );
    return body.check;
  }

  async bundle(checkId: string): Promise<Bundle> {
    return this.request<Bundle>(`/checks/${checkId}/bundle`);
  }

  async editFormula(checkId: string, formulaText: string): Promise<VersionInfo> {
    const body = await this.request<{ version: VersionInfo }>(
      `/checks/${checkId}/formula`,
      { method: "PUT", body: JSON.stringify({ formulaText }) },
    );
    return body.version;
  }

  async tagVersion(versionId: string, tag: string): Promise<VersionInfo> {
    const body = await this.request<{ version: VersionInfo }>(
      `/versions/${versionId}/tag`,
      { method: "POST", body: JSON.stringify({ tag }) },
    );
    return body.version;
  }
}
